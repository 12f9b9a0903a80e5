//! Strand objects and tensor words of the sl2 category layer.

use std::fmt;

/// Orientation sign of a strand or mark: `+` is downward, `-` upward.
/// A `-` strand carries the dual module.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn parse(s: &str) -> Option<Sign> {
        match s {
            "+" => Some(Sign::Plus),
            "-" => Some(Sign::Minus),
            _ => None,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// V_{n alpha} or its dual, depending on orientation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct StrandObject {
    pub color: u64,
    pub sign: Sign,
}

impl StrandObject {
    pub fn new(color: u64, sign: Sign) -> Self {
        StrandObject { color, sign }
    }

    pub fn module(color: u64) -> Self {
        StrandObject { color, sign: Sign::Plus }
    }

    pub fn dual(color: u64) -> Self {
        StrandObject { color, sign: Sign::Minus }
    }

    pub fn is_dual(&self) -> bool {
        self.sign == Sign::Minus
    }

    pub fn dim(&self) -> usize {
        2 * self.color as usize + 1
    }

    /// Weight of basis vector j, as the coefficient of alpha.
    /// On V: wt(b_j) = (n - j) alpha; on the dual, the negative.
    pub fn weight(&self, j: usize) -> i64 {
        let w = self.color as i64 - j as i64;
        if self.is_dual() {
            -w
        } else {
            w
        }
    }

    pub fn flipped(&self) -> Self {
        StrandObject { color: self.color, sign: self.sign.flip() }
    }
}

/// A tensor word of strand objects.
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct ObjectWord(pub Vec<StrandObject>);

impl ObjectWord {
    pub fn empty() -> Self {
        ObjectWord(Vec::new())
    }

    pub fn single(obj: StrandObject) -> Self {
        ObjectWord(vec![obj])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.0.iter().map(|o| o.dim()).product()
    }

    pub fn concat(&self, other: &ObjectWord) -> ObjectWord {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        ObjectWord(v)
    }

    /// Decompose a flat index into per-factor digits (leftmost factor most
    /// significant).
    pub fn digits(&self, mut index: usize) -> Vec<usize> {
        let mut out = vec![0; self.0.len()];
        for (slot, obj) in self.0.iter().enumerate().rev() {
            let d = obj.dim();
            out[slot] = index % d;
            index /= d;
        }
        out
    }

    pub fn index(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.0.len());
        let mut idx = 0;
        for (obj, d) in self.0.iter().zip(digits.iter()) {
            debug_assert!(*d < obj.dim());
            idx = idx * obj.dim() + d;
        }
        idx
    }
}

impl fmt::Display for ObjectWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|o| format!("V{}{}", o.color, if o.is_dual() { "*" } else { "" }))
            .collect();
        write!(f, "{}", parts.join("(x)"))
    }
}
