//! Closed forms for PRC(P_n) and PRC(C_n) and partitions attaining them.
//!
//! Partitions below are written with the 1-based labels `v_1..v_n` and
//! shifted to vertex indices `0..n` on output.

use super::FamilyError;
use crate::coalition::Partition;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Line {
    Path,
    Cycle,
}

/// PRC(P_n); `None` for `n = 0`.
pub fn formula_prc_path(n: usize) -> Option<usize> {
    Some(match n {
        0 => return None,
        1 => 1,
        2 => 2,
        3 => 0,
        5 => 3,
        4 | 6 | 8 => 4,
        7 | 9 | 10 | 11 | 13 => 5,
        _ => 6,
    })
}

/// PRC(C_n); `None` for `n < 3`.
pub fn formula_prc_cycle(n: usize) -> Option<usize> {
    Some(match n {
        0..=2 => return None,
        3 | 5 => 3,
        4 | 8 => 4,
        7 | 11 => 5,
        _ => 6,
    })
}

/// A prc-partition of `P_n` or `C_n` with exactly the formula's number of
/// blocks.
pub fn construct_known_prc_partition(line: Line, n: usize) -> Result<Partition, FamilyError> {
    let blocks = match line {
        Line::Path => path_blocks(n)?,
        Line::Cycle => cycle_blocks(n)?,
    };
    Ok(Partition::from_vertex_lists(
        blocks.into_iter().map(|b| b.into_iter().map(|v| v - 1).collect::<Vec<_>>()),
    ))
}

fn lists(blocks: &[&[usize]]) -> Vec<Vec<usize>> {
    blocks.iter().map(|b| b.to_vec()).collect()
}

fn singletons(n: usize) -> Vec<Vec<usize>> {
    (1..=n).map(|v| vec![v]).collect()
}

/// `{4k + o : k >= k0, o in offsets}` restricted to `1..=n`.
fn progression(k0: usize, offsets: [isize; 2], n: usize) -> Vec<usize> {
    let mut out: Vec<usize> = (k0..=n / 4 + 1)
        .flat_map(|k| offsets.map(|o| (4 * k as isize + o) as usize))
        .filter(|&v| v <= n)
        .collect();
    out.sort_unstable();
    out
}

fn path_blocks(n: usize) -> Result<Vec<Vec<usize>>, FamilyError> {
    Ok(match n {
        0 => return Err(FamilyError::BadParams("path needs n >= 1".into())),
        3 => return Err(FamilyError::NoPartition("P_3".into())),
        1 | 2 | 4 => singletons(n),
        5 => lists(&[&[1, 5], &[2], &[3, 4]]),
        6 => lists(&[&[2], &[5], &[3, 6], &[1, 4]]),
        7 => lists(&[&[2, 6], &[1, 7], &[3], &[4], &[5]]),
        8 => lists(&[&[2, 3, 6], &[1, 4, 5], &[7], &[8]]),
        9 => lists(&[&[3, 6, 9], &[1, 4, 8], &[2], &[5], &[7]]),
        10 => lists(&[&[1, 7], &[4, 10], &[2, 9], &[3, 6], &[5, 8]]),
        11 => lists(&[&[1, 4, 8, 11], &[2, 3, 6, 10], &[5], &[7], &[9]]),
        13 => lists(&[&[1, 4, 5, 8, 12], &[2, 3, 7, 10, 13], &[6], &[9], &[11]]),
        _ if n.is_multiple_of(2) => {
            let mut v1 = vec![2, 6, 9];
            v1.extend(progression(3, [0, 1], n));
            let mut v2 = vec![1, 4, 7];
            v2.extend(progression(3, [-1, 2], n));
            vec![v1, v2, vec![5], vec![3], vec![10], vec![8]]
        }
        _ => {
            let mut v1 = vec![2, 9, 12];
            v1.extend(progression(4, [-1, 0], n));
            let mut v2 = vec![1, 4, 7, 10];
            v2.extend(progression(4, [-2, 1], n));
            vec![v1, v2, vec![5, 8], vec![3, 6], vec![13], vec![11]]
        }
    })
}

fn cycle_blocks(n: usize) -> Result<Vec<Vec<usize>>, FamilyError> {
    Ok(match n {
        0..=2 => return Err(FamilyError::BadParams("cycle needs n >= 3".into())),
        3 | 4 | 6 => singletons(n),
        5 => lists(&[&[1], &[2, 3], &[4, 5]]),
        7 => lists(&[&[1, 7], &[2, 6], &[3], &[4], &[5]]),
        8 => lists(&[&[1, 2, 5], &[6], &[3, 4, 7], &[8]]),
        9 => lists(&[&[1, 7], &[2, 8], &[3, 9], &[4], &[5], &[6]]),
        11 => lists(&[&[1, 4, 8, 11], &[2, 3, 6, 10], &[5], &[9], &[7]]),
        12 => lists(&[&[1, 7], &[2, 8], &[3, 9], &[4, 10], &[5, 11], &[6, 12]]),
        15 => lists(&[&[1, 7, 13], &[2, 8, 14], &[3, 9, 15], &[4, 10], &[5, 11], &[6, 12]]),
        _ => proper_cycle_blocks(n),
    })
}

/// Proper partitions (`v_1 ∈ V_1`, `v_n ∈ V_4`) for `n >= 10`, `n ∉ {11, 12}`:
/// a base case for `n mod 4`, then `V_1 += {v_{k+1}, v_{k+2}}` and
/// `V_4 += {v_{k+3}, v_{k+4}}` per step.
fn proper_cycle_blocks(n: usize) -> Vec<Vec<usize>> {
    debug_assert!(n >= 10 && n != 11 && n != 12);
    let (k0, base) = match n % 4 {
        2 => (10, lists(&[&[1, 5, 8], &[4], &[2], &[3, 6, 10], &[7], &[9]])),
        1 => (13, lists(&[&[1, 5, 8, 11], &[2], &[4], &[3, 6, 13], &[9, 12], &[7, 10]])),
        0 => (16, lists(&[&[1, 5, 8, 11, 14], &[4], &[2], &[3, 6, 16], &[9, 12, 15], &[7, 10, 13]])),
        _ => (19, lists(&[&[1, 8, 11, 14, 17], &[4, 7], &[2, 5], &[3, 6, 9, 19], &[12, 15, 18], &[10, 13, 16]])),
    };
    let mut blocks = base;
    let mut k = k0;
    while k < n {
        blocks[0].extend([k + 1, k + 2]);
        blocks[3].extend([k + 3, k + 4]);
        k += 4;
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalition::validate_prc_partition;
    use crate::graph::Graph;

    fn line(kind: Line, n: usize) -> Graph {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if kind == Line::Cycle {
            edges.push((n - 1, 0));
        }
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn formula_tables() {
        let paths: Vec<_> = (1..=14).map(|n| formula_prc_path(n).unwrap()).collect();
        assert_eq!(paths, [1, 2, 0, 4, 3, 4, 5, 4, 5, 5, 5, 6, 5, 6]);
        let cycles: Vec<_> = (3..=13).map(|n| formula_prc_cycle(n).unwrap()).collect();
        assert_eq!(cycles, [3, 4, 3, 6, 5, 4, 6, 6, 5, 6, 6]);
        assert_eq!(formula_prc_path(0), None);
        assert_eq!(formula_prc_cycle(2), None);
    }

    #[test]
    fn path_constructions_validate() {
        for n in (1..=40).filter(|&n| n != 3) {
            let p = construct_known_prc_partition(Line::Path, n).unwrap();
            assert_eq!(Some(p.len()), formula_prc_path(n), "P_{n}");
            validate_prc_partition(&line(Line::Path, n), &p).unwrap_or_else(|e| panic!("P_{n}: {e}"));
        }
        assert!(matches!(construct_known_prc_partition(Line::Path, 3), Err(FamilyError::NoPartition(_))));
    }

    #[test]
    fn cycle_constructions_validate() {
        for n in 3..=40 {
            let p = construct_known_prc_partition(Line::Cycle, n).unwrap();
            assert_eq!(Some(p.len()), formula_prc_cycle(n), "C_{n}");
            validate_prc_partition(&line(Line::Cycle, n), &p).unwrap_or_else(|e| panic!("C_{n}: {e}"));
        }
        assert!(matches!(construct_known_prc_partition(Line::Cycle, 2), Err(FamilyError::BadParams(_))));
    }

    #[test]
    fn induction_step_keeps_proper_shape() {
        for n in [14, 17, 20, 23, 26] {
            let blocks = proper_cycle_blocks(n);
            assert!(blocks[0].contains(&1) && blocks[3].contains(&n), "C_{n}");
        }
    }
}
