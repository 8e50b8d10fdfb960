//! Words over `{1, ..., n}`, Lyndon words, and the truncated Foata-Zeilberger
//! product `prod_l (1 - circ_M(l) t^|l|) = det(I - t M)`.

use std::fmt;

use crate::algebra::{Field, Matrix, TruncatedSeries};
use crate::error::Result;

/// A word over the ordered alphabet `1 < 2 < ... < n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<usize>,
}

impl Word {
    /// Letters are 1-based.
    pub fn new(letters: Vec<usize>) -> Self {
        Word { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Strictly smaller than each of its proper rotations, i.e. primitive and
    /// least in its conjugacy class.
    pub fn is_lyndon(&self) -> bool {
        let m = self.letters.len();
        m > 0
            && (1..m).all(|k| {
                let rotated = self.letters[k..].iter().chain(&self.letters[..k]);
                self.letters.iter().lt(rotated)
            })
    }
}

impl fmt::Display for Word {
    /// Letters are concatenated; with multi-digit letters they are separated
    /// by dots.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.letters.iter().any(|&l| l > 9) { "." } else { "" };
        let parts: Vec<String> = self.letters.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

/// All Lyndon words of length `1..=max_len` over `n` letters, shortest first
/// and lexicographic within each length. Generated by Duval's successor
/// iteration.
pub fn lyndon_words(n: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || max_len == 0 {
        return out;
    }
    let mut w: Vec<usize> = vec![0];
    loop {
        out.push(Word::new(w.iter().map(|&l| l + 1).collect()));
        let period = w.len();
        while w.len() < max_len {
            w.push(w[w.len() - period]);
        }
        while w.last() == Some(&(n - 1)) {
            w.pop();
        }
        match w.last_mut() {
            Some(last) => *last += 1,
            None => break,
        }
    }
    out.sort_by_key(Word::len);
    out
}

/// `M[w1][w2] M[w2][w3] ... M[wk][w1]`.
pub fn circ_matrix<K: Field>(m: &Matrix<K>, w: &Word) -> K {
    let k = w.len();
    let mut acc = K::one();
    for i in 0..k {
        acc = acc.mul(m.get(w.letters[i] - 1, w.letters[(i + 1) % k] - 1));
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// `prod_{|l| <= T} (1 - circ_M(l) t^|l|)` truncated at `t^T`.
pub fn fz_product_truncated<K: Field>(m: &Matrix<K>, order: usize) -> Result<TruncatedSeries<K>> {
    m.require_square()?;
    let mut acc = TruncatedSeries::one(order);
    for word in lyndon_words(m.rows(), order) {
        let c = circ_matrix(m, &word);
        if c.is_zero() {
            continue;
        }
        let mut factor = vec![K::zero(); order + 1];
        factor[0] = K::one();
        factor[word.len()] = c.neg();
        acc = acc.product(&TruncatedSeries::new(factor, order))?;
    }
    Ok(acc)
}

/// Checks the Lyndon-word product against `det(I - t M)` modulo `t^{T+1}`.
pub fn fz_truncated_check<K: Field>(m: &Matrix<K>, order: usize) -> Result<bool> {
    let lhs = fz_product_truncated(m, order)?;
    let rhs = TruncatedSeries::from_poly(&m.reciprocal_charpoly()?, order);
    Ok(lhs == rhs)
}
