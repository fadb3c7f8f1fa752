use super::{check_commuting, closure};
use crate::error::Result;
use crate::matrix::Mat;

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

/// Degree of polynomial freedom of a commuting system.
///
/// The least `q` for which some `q` members of the system generate the
/// same unital algebra as the whole system, with none of the chosen
/// members lying in the algebra generated by the others. Only subsets of
/// the given system are searched.
pub fn freedom_degree(system: &[Mat]) -> Result<usize> {
    let Some(first) = system.first() else {
        return Ok(0);
    };
    let n = first.rows();
    check_commuting(n, system)?;
    let target = closure(n, system)?;
    for q in 0..=system.len() {
        for subset in combinations(system.len(), q) {
            let chosen: Vec<Mat> = subset.iter().map(|&i| system[i].clone()).collect();
            if !closure(n, &chosen)?.same_span(&target) {
                continue;
            }
            if independent(n, &chosen)? {
                return Ok(q);
            }
        }
    }
    unreachable!("the full system generates its own closure")
}

fn independent(n: usize, chosen: &[Mat]) -> Result<bool> {
    for i in 0..chosen.len() {
        let others: Vec<Mat> = chosen.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, m)| m.clone()).collect();
        if closure(n, &others)?.contains(&chosen[i]) {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn e(n: usize, i: usize, j: usize) -> Mat {
        Mat::unit(n, i - 1, j - 1)
    }

    #[test]
    fn combinations_small() {
        assert_eq!(combinations(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(combinations(2, 0), vec![Vec::<usize>::new()]);
        assert!(combinations(2, 3).is_empty());
    }

    #[test]
    fn freedom_examples() {
        assert_eq!(freedom_degree(&[]).unwrap(), 0);
        let m0 = &e(3, 1, 2) + &e(3, 2, 3);
        assert_eq!(freedom_degree(std::slice::from_ref(&m0)).unwrap(), 1);
        assert_eq!(freedom_degree(&[Mat::identity(3), m0.clone(), m0.pow(2)]).unwrap(), 1);
        assert_eq!(freedom_degree(&[Mat::identity(3), e(3, 1, 2), e(3, 1, 3)]).unwrap(), 2);
        assert!(matches!(freedom_degree(&[e(2, 1, 2), e(2, 2, 1)]), Err(Error::NonCommuting(0, 1))));
    }
}
