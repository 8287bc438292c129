//! Word problem in `B_{1,n}` through the faithful Artin representation.
//!
//! `B_{1,n}` embeds in `B_{n+1}` (strands `0..=n`, strand 0 fixed) via
//! `t ↦ σ_0²`; `B_{n+1}` acts faithfully on the free group `F(x_0, …, x_n)`.

use super::{BraidWord, Generator};

/// Letter of a free group: generator index and sign.
type FLetter = (usize, i8);

fn push(out: &mut Vec<FLetter>, l: FLetter) {
    if out.last() == Some(&(l.0, -l.1)) {
        out.pop();
    } else {
        out.push(l);
    }
}

/// Images of the free generators under the automorphism induced by a word.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ArtinImage(Vec<Vec<FLetter>>);

fn apply_sigma(images: &mut [Vec<FLetter>], i: usize, sign: i8) {
    // σ_i: x_i ↦ x_i x_{i+1} x_i^-1, x_{i+1} ↦ x_i
    // σ_i^-1: x_i ↦ x_{i+1}, x_{i+1} ↦ x_{i+1}^-1 x_i x_{i+1}
    let sub = |l: FLetter, out: &mut Vec<FLetter>| {
        let (j, s) = l;
        let img: Vec<FLetter> = if sign > 0 {
            if j == i {
                vec![(i, 1), (i + 1, 1), (i, -1)]
            } else if j == i + 1 {
                vec![(i, 1)]
            } else {
                vec![(j, 1)]
            }
        } else if j == i {
            vec![(i + 1, 1)]
        } else if j == i + 1 {
            vec![(i + 1, -1), (i, 1), (i + 1, 1)]
        } else {
            vec![(j, 1)]
        };
        if s > 0 {
            img.into_iter().for_each(|x| push(out, x));
        } else {
            img.into_iter().rev().for_each(|(k, t)| push(out, (k, -t)));
        }
    };
    for w in images.iter_mut() {
        let mut out = Vec::with_capacity(w.len() + 2);
        for &l in w.iter() {
            sub(l, &mut out);
        }
        *w = out;
    }
}

impl ArtinImage {
    pub fn of(w: &BraidWord, strands: usize) -> Self {
        let mut images: Vec<Vec<FLetter>> = (0..=strands).map(|j| vec![(j, 1)]).collect();
        for &Generator { kind, index, sign } in w.letters() {
            match kind {
                super::GenKind::Loop => {
                    apply_sigma(&mut images, 0, sign);
                    apply_sigma(&mut images, 0, sign);
                }
                super::GenKind::Crossing => apply_sigma(&mut images, index, sign),
            }
        }
        Self(images)
    }
}

/// Whether two words represent the same element of `B_{1,n}`.
pub fn group_equal(a: &BraidWord, b: &BraidWord) -> bool {
    let n = a.strands().max(b.strands());
    ArtinImage::of(a, n) == ArtinImage::of(b, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> BraidWord {
        BraidWord::parse(s, Some(4)).unwrap()
    }

    #[test]
    fn defining_relations_hold() {
        assert!(group_equal(&w("s1 t s1 t"), &w("t s1 t s1")));
        assert!(group_equal(&w("t s2"), &w("s2 t")));
        assert!(group_equal(&w("s1 s2 s1"), &w("s2 s1 s2")));
        assert!(group_equal(&w("s1 s3"), &w("s3 s1")));
        assert!(group_equal(&w("s1 s1^-1 t t^-1"), &w("")));
    }

    #[test]
    fn non_relations_fail() {
        assert!(!group_equal(&w("s1 t"), &w("t s1")));
        assert!(!group_equal(&w("s1 s1"), &w("")));
        assert!(!group_equal(&w("s1 s2"), &w("s2 s1")));
        assert!(!group_equal(&w("s1 t s1 t"), &w("t s1 t s1^-1")));
    }
}
