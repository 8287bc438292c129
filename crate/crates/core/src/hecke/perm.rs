//! Permutations indexing the standard basis `T_w` of the finite Hecke algebra,
//! and the Jones normal form of their reduced words.

use std::fmt;

/// Permutation of `0..n` in one-line notation: `img[x] = w(x)`. The
/// generator `s_i` (`1 ≤ i < n`) swaps `i - 1` and `i`; a word
/// `s_{a_1} … s_{a_k}` denotes the composite `s_{a_1} ∘ … ∘ s_{a_k}`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    img: Vec<u8>,
}

impl Perm {
    pub fn identity(n: usize) -> Self {
        Self {
            img: (0..n as u8).collect(),
        }
    }

    pub fn from_images(img: Vec<u8>) -> Option<Self> {
        let mut seen = vec![false; img.len()];
        for &v in &img {
            let v = v as usize;
            if v >= img.len() || seen[v] {
                return None;
            }
            seen[v] = true;
        }
        Some(Self { img })
    }

    pub fn images(&self) -> &[u8] {
        &self.img
    }

    pub fn degree(&self) -> usize {
        self.img.len()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &v)| i == v as usize)
    }

    fn position_of(&self, v: u8) -> usize {
        self.img
            .iter()
            .position(|&x| x == v)
            .expect("value present")
    }

    /// `s_i ∘ self`.
    pub fn left_mul_s(&self, i: usize) -> Self {
        let (a, b) = ((i - 1) as u8, i as u8);
        Self {
            img: self
                .img
                .iter()
                .map(|&v| {
                    if v == a {
                        b
                    } else if v == b {
                        a
                    } else {
                        v
                    }
                })
                .collect(),
        }
    }

    /// `self ∘ s_i`.
    pub fn right_mul_s(&self, i: usize) -> Self {
        let mut img = self.img.clone();
        img.swap(i - 1, i);
        Self { img }
    }

    /// Whether `ℓ(s_i w) > ℓ(w)`.
    pub fn left_ascent(&self, i: usize) -> bool {
        self.position_of((i - 1) as u8) < self.position_of(i as u8)
    }

    /// Whether `ℓ(w s_i) > ℓ(w)`.
    pub fn right_ascent(&self, i: usize) -> bool {
        self.img[i - 1] < self.img[i]
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let n = self.img.len();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.img[i] > self.img[j])
            .count()
    }

    pub fn from_word(n: usize, word: &[usize]) -> Self {
        word.iter()
            .fold(Self::identity(n), |p, &i| p.right_mul_s(i))
    }

    /// Jones normal form: `w = c_1 c_2 … c_{n-1}` with
    /// `c_i = s_i s_{i-1} … s_{i-k_i}` or empty.
    pub fn jones(&self) -> JonesWord {
        let mut w = self.clone();
        let mut blocks = vec![];
        for i in (1..w.degree()).rev() {
            // 0-based: value i must end up at position i
            let m = w.position_of(i as u8);
            if m == i {
                continue;
            }
            for j in m + 1..=i {
                w = w.right_mul_s(j);
            }
            blocks.push(JonesBlock {
                top: i,
                len: i - m - 1,
            });
        }
        blocks.reverse();
        JonesWord { blocks }
    }

    /// Reduced word in Jones normal form.
    pub fn reduced_word(&self) -> Vec<usize> {
        self.jones().letters()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.jones())
    }
}

/// `g_top g_{top-1} … g_{top-len}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesBlock {
    pub top: usize,
    pub len: usize,
}

/// Word in Jones normal form; block tops strictly increase.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct JonesWord {
    pub blocks: Vec<JonesBlock>,
}

impl JonesWord {
    pub fn new(blocks: Vec<JonesBlock>) -> Option<Self> {
        let ok = blocks.iter().all(|b| b.top >= 1 && b.len < b.top)
            && blocks.windows(2).all(|w| w[0].top < w[1].top);
        ok.then_some(Self { blocks })
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn letters(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|b| (b.top - b.len..=b.top).rev())
            .collect()
    }

    pub fn to_perm(&self, n: usize) -> Perm {
        Perm::from_word(n, &self.letters())
    }

    pub fn max_index(&self) -> usize {
        self.blocks.last().map_or(0, |b| b.top)
    }

    /// Parses `g3 g2 . g5` (or `1`).
    pub fn parse(s: &str) -> Option<Self> {
        let s = s.trim();
        if s == "1" || s.is_empty() {
            return Some(Self::default());
        }
        let mut blocks = vec![];
        for part in s.split('.') {
            let idx: Vec<usize> = part
                .split_whitespace()
                .map(|tok| tok.strip_prefix('g')?.parse().ok())
                .collect::<Option<_>>()?;
            let top = *idx.first()?;
            if idx.iter().enumerate().any(|(k, &j)| j + k != top) {
                return None;
            }
            blocks.push(JonesBlock {
                top,
                len: idx.len() - 1,
            });
        }
        Self::new(blocks)
    }
}

impl fmt::Display for JonesWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blocks.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                (b.top - b.len..=b.top)
                    .rev()
                    .map(|i| format!("g{i}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect();
        write!(f, "{}", parts.join(" . "))
    }
}

/// All permutations of `0..n`.
pub fn all_perms(n: usize) -> Vec<Perm> {
    let mut out = vec![];
    let mut cur: Vec<u8> = (0..n as u8).collect();
    fn rec(k: usize, cur: &mut Vec<u8>, out: &mut Vec<Perm>) {
        if k == cur.len() {
            out.push(Perm { img: cur.clone() });
            return;
        }
        for j in k..cur.len() {
            cur.swap(k, j);
            rec(k + 1, cur, out);
            cur.swap(k, j);
        }
    }
    rec(0, &mut cur, &mut out);
    out.sort();
    out
}
