use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Permutation of {0, ..., degree-1}, stored as the image array:
/// `images[i]` is where i goes. Composition is left-to-right:
/// `(a.then(b))(x) = b(a(x))`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree).collect(),
        }
    }

    /// Validates that `images` is a bijection on {0, ..., n-1}.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {} out of range for degree {}",
                    x, n
                )));
            }
            if seen[x] {
                return Err(Error::InvalidPermutation(format!("image {} repeated", x)));
            }
            seen[x] = true;
        }
        Ok(Perm { images })
    }

    /// Parses cycle notation like "(0 1)(2 3)" or "(0 1 2)", with points
    /// separated by spaces or commas. "()" and the empty string are the
    /// identity. Points beyond any cycle are fixed.
    pub fn parse_cycles(s: &str, degree: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..degree).collect();
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Perm { images });
        }
        let bytes = s.as_bytes();
        let mut i = 0;
        let mut moved = vec![false; degree];
        while i < bytes.len() {
            while i < bytes.len() && (bytes[i] as char).is_whitespace() {
                i += 1;
            }
            if i >= bytes.len() {
                break;
            }
            if bytes[i] != b'(' {
                return Err(Error::Parse(format!("expected '(' in cycle string {:?}", s)));
            }
            let close = s[i..]
                .find(')')
                .map(|k| i + k)
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {:?}", s)))?;
            let body = &s[i + 1..close];
            let pts: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad point {:?} in {:?}", t, s)))
                })
                .collect::<Result<_>>()?;
            for &pt in &pts {
                if pt >= degree {
                    return Err(Error::Parse(format!(
                        "point {} exceeds degree {} in {:?}",
                        pt, degree, s
                    )));
                }
                if moved[pt] {
                    return Err(Error::Parse(format!("point {} appears twice in {:?}", pt, s)));
                }
                moved[pt] = true;
            }
            if pts.len() > 1 {
                for w in 0..pts.len() {
                    images[pts[w]] = pts[(w + 1) % pts.len()];
                }
            }
            i = close + 1;
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Left-to-right composition: self first, then other.
    pub fn then(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: self.images.iter().map(|&x| other.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Conjugate by g: g^{-1} * self * g (as functions, left-to-right).
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    pub fn order(&self) -> usize {
        let mut ord = 1usize;
        let mut cur = self.clone();
        while !cur.is_identity() {
            cur = cur.then(self);
            ord += 1;
        }
        ord
    }

    /// Cycle notation; identity renders as "()".
    pub fn cycle_string(&self) -> String {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = String::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            out.push('(');
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    out.push(' ');
                }
                out.push_str(&x.to_string());
                first = false;
                x = self.images[x];
            }
            out.push(')');
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compose_left_to_right() {
        // a = (0 1), b = (1 2); a then b sends 0 -> 1 -> 2.
        let a = Perm::parse_cycles("(0 1)", 3).unwrap();
        let b = Perm::parse_cycles("(1 2)", 3).unwrap();
        let ab = a.then(&b);
        assert_eq!(ab.apply(0), 2);
        assert_eq!(ab.cycle_string(), "(0 2 1)");
    }

    #[test]
    fn inverse_cancels() {
        let g = Perm::parse_cycles("(0 1 2 3)", 5).unwrap();
        assert!(g.then(&g.inverse()).is_identity());
        assert!(g.inverse().then(&g).is_identity());
    }

    #[test]
    fn parse_round_trip() {
        let g = Perm::parse_cycles("(0 1)(2 3)", 4).unwrap();
        assert_eq!(g.images(), &[1, 0, 3, 2]);
        assert_eq!(g.cycle_string(), "(0 1)(2 3)");
        assert_eq!(Perm::parse_cycles("()", 3).unwrap(), Perm::identity(3));
        assert_eq!(Perm::parse_cycles("", 3).unwrap(), Perm::identity(3));
    }

    #[test]
    fn parse_rejects_bad_input() {
        assert!(Perm::parse_cycles("(0 1", 3).is_err());
        assert!(Perm::parse_cycles("(0 5)", 3).is_err());
        assert!(Perm::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Perm::from_images(vec![0, 0, 1]).is_err());
        assert!(Perm::from_images(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn orders() {
        assert_eq!(Perm::identity(4).order(), 1);
        assert_eq!(Perm::parse_cycles("(0 1 2 3)", 4).unwrap().order(), 4);
        assert_eq!(Perm::parse_cycles("(0 1)(2 3 4)", 5).unwrap().order(), 6);
    }

    #[test]
    fn conjugation_relabels_cycles() {
        // (0 1)^(1 2) = (0 2)
        let t = Perm::parse_cycles("(0 1)", 3).unwrap();
        let g = Perm::parse_cycles("(1 2)", 3).unwrap();
        assert_eq!(t.conjugate_by(&g).cycle_string(), "(0 2)");
    }
}
