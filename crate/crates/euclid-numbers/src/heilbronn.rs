use crate::continuant::continuant;
use crate::euclid::{gcd, remainder_sum};
use crate::mobius::{divisors, mobius};

/// One side of the Heilbronn correspondence: positive integers with
/// `x > y >= 1`, `x' > y' >= 1` and `n = x * x' + y * y'` for the ambient
/// `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub struct HeilbronnQuadruple {
    pub x: u64,
    pub x_prime: u64,
    pub y: u64,
    pub y_prime: u64,
}

/// Marked continued-fraction expansions of `n`: words `(a0, ..., at)` of
/// positive integers with `a0 >= 2`, `at >= 2` and continuant value `n`,
/// paired with a marker `0 <= s < t`. Returned as `(s, word)` pairs.
pub fn heilbronn_expansions(n: u64) -> Vec<(usize, Vec<u64>)> {
    let mut words = Vec::new();
    if n >= 2 {
        // Depth-first extension on the right, tracking the continuant of
        // the word and of the word minus its last entry:
        // appending e turns (p, q) into (e * p + q, p).
        let mut word = Vec::new();
        for a0 in 2..=n {
            word.push(a0);
            extend_words(n, &mut word, a0, 1, &mut words);
            word.pop();
        }
    }
    let mut marked = Vec::new();
    for word in words {
        let t = word.len() - 1;
        for s in 0..t {
            marked.push((s, word.clone()));
        }
    }
    marked
}

fn extend_words(n: u64, word: &mut Vec<u64>, p: u64, q: u64, out: &mut Vec<Vec<u64>>) {
    if p == n && word.len() >= 2 && *word.last().unwrap() >= 2 {
        out.push(word.clone());
        // No extension can stay at n: appending e gives e*p + q > n.
    }
    if p >= n {
        return;
    }
    let mut e = 1u64;
    loop {
        let value = e * p + q;
        if value > n {
            break;
        }
        word.push(e);
        extend_words(n, word, value, p, out);
        word.pop();
        e += 1;
    }
}

/// Maps a marked expansion to its quadruple through the split identity:
/// `x = <a0..as>`, `x' = <a{s+1}..at>`, `y = <a0..a{s-1}>`,
/// `y' = <a{s+2}..at>`.
pub fn expansion_to_quadruple(s: usize, word: &[u64]) -> HeilbronnQuadruple {
    let t = word.len() - 1;
    debug_assert!(s < t);
    HeilbronnQuadruple {
        x: continuant(&word[..=s]).expect("positive entries"),
        x_prime: continuant(&word[s + 1..]).expect("positive entries"),
        y: continuant(&word[..s]).expect("positive entries"),
        y_prime: continuant(&word[(s + 2).min(t + 1)..]).expect("positive entries"),
    }
}

/// Enumerates the quadruples `x > y >= 1`, `x' > y' >= 1`,
/// `n = x x' + y y'` with `gcd(x, y) = 1`, and additionally
/// `gcd(x', y') = 1` when `require_second_gcd` is set.
///
/// The scan iterates `x >= 2`, `y < x`, and `y'` with `y' < n / (x + y)`
/// (which encodes `x' > y'`), accepting when `x` divides `n - y y'`.
pub fn heilbronn_quadruples(n: u64, require_second_gcd: bool) -> Vec<HeilbronnQuadruple> {
    let mut out = Vec::new();
    for x in 2..=n / 2 {
        for y in 1..x {
            if gcd(x, y) != 1 {
                continue;
            }
            let mut y_prime = 1u64;
            while (x + y) * y_prime < n {
                let rest = n - y * y_prime;
                if rest % x == 0 {
                    let x_prime = rest / x;
                    debug_assert!(x_prime > y_prime);
                    if !require_second_gcd || gcd(x_prime, y_prime) == 1 {
                        out.push(HeilbronnQuadruple {
                            x,
                            x_prime,
                            y,
                            y_prime,
                        });
                    }
                }
                y_prime += 1;
            }
        }
    }
    out
}

/// G(n): the sum of `x'` over all quadruples with no gcd condition.
pub fn big_g(n: u64) -> u64 {
    let mut sum = 0u64;
    for x in 2..=n / 2 {
        for y in 1..x {
            let mut y_prime = 1u64;
            while (x + y) * y_prime < n {
                let rest = n - y * y_prime;
                if rest % x == 0 {
                    sum += rest / x;
                }
                y_prime += 1;
            }
        }
    }
    sum
}

/// G*(n): the sum of `x'` over quadruples with `gcd(x, y) = 1` only.
pub fn big_g_star(n: u64) -> u64 {
    heilbronn_quadruples(n, false)
        .iter()
        .map(|q| q.x_prime)
        .sum()
}

/// G*(n) recovered from G by Möbius inversion over the divisors of `n`.
pub fn big_g_star_via_mobius(n: u64) -> i64 {
    divisors(n)
        .iter()
        .map(|&d| mobius(d) as i64 * big_g(n / d) as i64)
        .sum()
}

/// Checks both displayed remainder-sum identities for one `n`, exactly.
///
/// Coprime form:
///   sum of M̄(n, k) over coprime k <= n/2
///     = (sum of x' over quadruples with both gcd conditions)
///     + (number of coprime k <= n/2).
///
/// Unrestricted form:
///   sum of M̄(n, k) over all 1 <= k <= n/2
///     = G*(n) + sum of gcd(n, k) over the same range.
pub fn heilbronn_identity_check(n: u64) -> (bool, bool) {
    let half = n / 2;

    let mut coprime_lhs = 0u128;
    let mut coprime_gcd_sum = 0u128;
    let mut full_lhs = 0u128;
    let mut full_gcd_sum = 0u128;
    for k in 1..=half {
        let g = gcd(n, k);
        let m = remainder_sum(n, k) as u128;
        full_lhs += m;
        full_gcd_sum += g as u128;
        if g == 1 {
            coprime_lhs += m;
            coprime_gcd_sum += 1;
        }
    }

    let both: u128 = heilbronn_quadruples(n, true)
        .iter()
        .map(|q| q.x_prime as u128)
        .sum();
    let first_only = big_g_star(n) as u128;

    (
        coprime_lhs == both + coprime_gcd_sum,
        full_lhs == first_only + full_gcd_sum,
    )
}
