//! Closed-form Ramsey quantities and query bounds.
//!
//! `lg` is the base-2 logarithm with `lg 0 = 0`.

use crate::error::{Error, Result};

pub fn lg(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x.log2()
    }
}

/// `R(r_1 K2, ..., r_t K2) = max r_i + 1 + sum (r_i - 1)`.
pub fn ramsey_matching_number(rs: &[usize]) -> Result<usize> {
    if rs.len() < 2 {
        return Err(Error::Precondition(format!(
            "need at least two matching sizes, got {}",
            rs.len()
        )));
    }
    if rs.contains(&0) {
        return Err(Error::InvalidGoal("matching size must be positive".into()));
    }
    let max = *rs.iter().max().unwrap();
    Ok(max + 1 + rs.iter().map(|r| r - 1).sum::<usize>())
}

/// Order of the monochromatic tree guaranteed in every 3-coloring of `K_n`.
pub fn k_of(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Precondition(format!("k(n) needs n >= 3, got {n}")));
    }
    Ok(if n % 4 == 2 { n / 2 + 1 } else { n.div_ceil(2) })
}

/// `R_t(T_n)` for two and three colors.
pub fn tree_ramsey(t: usize, n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::Precondition(format!("tree order must be >= 2, got {n}")));
    }
    match t {
        2 => Ok(n),
        3 if n % 2 == 0 => Ok(2 * n - 2),
        3 => Ok(2 * n - 1),
        _ => Err(Error::Precondition(format!(
            "tree Ramsey numbers are only known here for t in {{2, 3}}, got {t}"
        ))),
    }
}

/// Online value on an unbounded board: `(t - 1)(r - 1) + 1`.
pub fn trivial_online_value(t: usize, r: usize) -> usize {
    (t - 1) * (r - 1) + 1
}

/// Per-component query budget `q(m, k) = 2k - 1 + (k - 3) lg(m - 2)`, with `q(1, 1) = 1`.
pub fn q_bound(m: usize, k: usize) -> Result<f64> {
    match (m, k) {
        (1, 1) => Ok(1.0),
        (m, k) if m >= 2 && k >= 2 => {
            let k = k as f64;
            Ok(2.0 * k - 1.0 + (k - 3.0) * lg((m - 2) as f64))
        }
        _ => Err(Error::Precondition(format!("q({m}, {k}) is not defined"))),
    }
}

/// `(2t - 1 + (t - 3) lg(t - 2)) / (t + 1)`, the matching strategy's queries per vertex.
pub fn matching_coefficient(t: usize) -> Result<f64> {
    if t < 2 {
        return Err(Error::TooFewColors(t));
    }
    let tf = t as f64;
    Ok((2.0 * tf - 1.0 + (tf - 3.0) * lg((t - 2) as f64)) / (tf + 1.0))
}

/// `floor(matching_coefficient(t) * n)`, robust against float noise on exact products.
pub fn matching_query_bound(t: usize, n: usize) -> Result<usize> {
    let x = matching_coefficient(t)? * n as f64;
    Ok((x + 1e-9).floor() as usize)
}

/// Cornering lower bound for `rK2` on `n = (t + 1) r - t` vertices.
pub fn matching_cornering_lower_bound(t: usize, n: usize) -> Result<usize> {
    if t < 2 {
        return Err(Error::TooFewColors(t));
    }
    if (n + t) % (t + 1) != 0 || (n + t) / (t + 1) < 2 {
        return Err(Error::Precondition(format!(
            "n = {n} is not of the form (t+1)r - t with r >= 2 for t = {t}"
        )));
    }
    Ok(match t {
        2 => (2 * n + 1) * (n - 1) / 9,
        3 => (7 * n + 1) * (n - 1) / 16,
        _ => n * (n - 1) / 2,
    })
}

/// `6 floor(n/4)^2`, the cornering lower bound for 3-colored trees on `k(n) + 1` vertices.
pub fn tree3_lower_bound(n: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::Precondition(format!("need n >= 3, got {n}")));
    }
    Ok(6 * (n / 4) * (n / 4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn choose2(x: usize) -> usize {
        x * x.saturating_sub(1) / 2
    }

    #[test]
    fn ramsey_values() {
        assert_eq!(ramsey_matching_number(&[2, 2]).unwrap(), 5);
        assert_eq!(ramsey_matching_number(&[1, 1]).unwrap(), 2);
        assert_eq!(ramsey_matching_number(&[2, 2, 2]).unwrap(), 6);
        assert!(ramsey_matching_number(&[3]).is_err());
        assert!(ramsey_matching_number(&[]).is_err());

        assert_eq!(tree_ramsey(2, 7).unwrap(), 7);
        assert_eq!(tree_ramsey(3, 4).unwrap(), 6);
        assert_eq!(tree_ramsey(3, 5).unwrap(), 9);
        assert!(tree_ramsey(4, 5).is_err());
    }

    #[test]
    fn k_values() {
        assert_eq!(k_of(6).unwrap(), 4);
        assert_eq!(k_of(5).unwrap(), 3);
        assert_eq!(k_of(8).unwrap(), 4);
        assert!(k_of(2).is_err());
    }

    #[test]
    fn online_and_budget_values() {
        assert_eq!(trivial_online_value(2, 3), 3);
        assert_eq!(trivial_online_value(7, 1), 1);
        assert_eq!(trivial_online_value(4, 2), 4);

        assert_eq!(q_bound(1, 1).unwrap(), 1.0);
        assert_eq!(q_bound(2, 2).unwrap(), 3.0);
        assert_eq!(q_bound(4, 4).unwrap(), 8.0);
        assert!(q_bound(1, 2).is_err());

        assert_eq!(matching_coefficient(2).unwrap(), 1.0);
        assert_eq!(matching_coefficient(3).unwrap(), 1.25);
        assert!((matching_coefficient(4).unwrap() - 1.6).abs() < 1e-12);
        assert!(matching_coefficient(1).is_err());
        assert_eq!(matching_query_bound(4, 10).unwrap(), 16);
        assert_eq!(matching_query_bound(3, 6).unwrap(), 7);
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(matching_cornering_lower_bound(2, 4).unwrap(), 3);
        assert_eq!(matching_cornering_lower_bound(3, 5).unwrap(), 9);
        assert_eq!(matching_cornering_lower_bound(4, 6).unwrap(), 15);
        assert!(matching_cornering_lower_bound(2, 5).is_err());
        assert!(matching_cornering_lower_bound(2, 1).is_err());

        assert_eq!(tree3_lower_bound(4).unwrap(), 6);
        assert_eq!(tree3_lower_bound(8).unwrap(), 24);
        assert_eq!(tree3_lower_bound(3).unwrap(), 0);
    }

    #[test]
    fn two_color_cornering_bound_matches_the_min_form() {
        for r in 2..200 {
            let n = 3 * r - 2;
            let v1 = (2 * n + 1) / 3;
            assert_eq!(v1, 2 * r - 1);
            let min_form = choose2(v1).min(choose2(n) - choose2(v1));
            assert_eq!(matching_cornering_lower_bound(2, n).unwrap(), min_form, "n = {n}");
        }
    }

    #[test]
    fn three_color_cornering_bound_matches_the_complement_form() {
        for r in 2..200 {
            let n = 4 * r - 3;
            assert_eq!(
                matching_cornering_lower_bound(3, n).unwrap(),
                choose2(n) - (r - 1) * (r - 1)
            );
        }
    }
}
