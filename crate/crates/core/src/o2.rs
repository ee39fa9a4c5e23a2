//! Closed subgroups of `O(2)` and exact arithmetic in its finite dihedral
//! subgroups.
//!
//! At modulus `q`, `r_t` is the rotation by `2πt/q` and `f_t = r_t κ` with
//! `κ` the reflection in the horizontal axis. The standard `D_n` is realised
//! at modulus `2n` by the even turns, so its normaliser `D_2n` is the full
//! set of `4n` elements at that modulus.

use std::fmt;

/// Conjugacy class of a closed subgroup of `O(2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum O2Closed {
    Z(u32),
    D(u32),
    SO2,
    O2,
}

impl O2Closed {
    /// Order of a finite subgroup, `None` for `SO(2)` and `O(2)`.
    pub fn order(&self) -> Option<u64> {
        match *self {
            O2Closed::Z(n) => Some(n as u64),
            O2Closed::D(n) => Some(2 * n as u64),
            _ => None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        *self == O2Closed::Z(1)
    }

    /// Preimage under the `nu`-fold covering `O(2) -> O(2)`.
    pub fn fold(&self, nu: u32) -> O2Closed {
        match *self {
            O2Closed::Z(n) => O2Closed::Z(n * nu),
            O2Closed::D(n) => O2Closed::D(n * nu),
            other => other,
        }
    }

    /// Whether the Weyl group `N(H)/H` in `O(2)` is finite.
    pub fn weyl_finite(&self) -> bool {
        !matches!(self, O2Closed::Z(_))
    }
}

impl fmt::Display for O2Closed {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            O2Closed::Z(n) => write!(f, "Z{n}"),
            O2Closed::D(n) => write!(f, "D{n}"),
            O2Closed::SO2 => write!(f, "SO(2)"),
            O2Closed::O2 => write!(f, "O(2)"),
        }
    }
}

/// Isomorphism type of a finite quotient.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quotient {
    Z(u32),
    D(u32),
}

impl Quotient {
    pub fn order(&self) -> u64 {
        match *self {
            Quotient::Z(n) => n as u64,
            Quotient::D(n) => 2 * n as u64,
        }
    }

    pub fn is_trivial(&self) -> bool {
        *self == Quotient::Z(1)
    }
}

impl fmt::Display for Quotient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quotient::Z(n) => write!(f, "Z{n}"),
            Quotient::D(n) => write!(f, "D{n}"),
        }
    }
}

fn divisors(n: u32) -> impl Iterator<Item = u32> {
    (1..=n).filter(move |d| n % d == 0)
}

/// Kernels of continuous epimorphisms from `h` onto finite groups, with the
/// quotient type, up to conjugacy in `O(2)`.
///
/// For `D_n` with `n` even the two index-2 dihedral kernels are distinct in
/// `D_n` but conjugate under `N(D_n) = D_2n`, so a single entry stands for
/// both; the Goursat enumeration keeps track of which one a class uses.
pub fn finite_epimorphism_targets(h: O2Closed) -> Vec<(Quotient, O2Closed)> {
    match h {
        O2Closed::Z(n) => divisors(n).map(|d| (Quotient::Z(d), O2Closed::Z(n / d))).collect(),
        O2Closed::D(n) => {
            let mut out: Vec<(Quotient, O2Closed)> =
                divisors(n).map(|d| (Quotient::D(d), O2Closed::Z(n / d))).collect();
            if n % 2 == 0 {
                out.push((Quotient::Z(2), O2Closed::D(n / 2)));
            }
            out.push((Quotient::Z(1), O2Closed::D(n)));
            out
        }
        O2Closed::SO2 => vec![(Quotient::Z(1), O2Closed::SO2)],
        O2Closed::O2 => vec![(Quotient::Z(1), O2Closed::O2), (Quotient::Z(2), O2Closed::SO2)],
    }
}

/// Element of the finite dihedral group at some modulus `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DElem {
    pub turn: u32,
    pub refl: bool,
}

impl DElem {
    pub const IDENTITY: DElem = DElem {
        turn: 0,
        refl: false,
    };

    pub fn rot(turn: u32) -> DElem {
        DElem { turn, refl: false }
    }

    pub fn reflection(turn: u32) -> DElem {
        DElem { turn, refl: true }
    }

    pub fn mul(self, other: DElem, q: u32) -> DElem {
        let (a, b) = (self.turn, other.turn);
        let turn = if self.refl { a + q - b } else { a + b } % q;
        DElem {
            turn,
            refl: self.refl != other.refl,
        }
    }

    pub fn inv(self, q: u32) -> DElem {
        if self.refl {
            self
        } else {
            DElem::rot((q - self.turn) % q)
        }
    }

    /// `g^-1 self g`.
    pub fn conj_by(self, g: DElem, q: u32) -> DElem {
        g.inv(q).mul(self, q).mul(g, q)
    }

    /// Angle in units of full turns.
    pub fn angle(self, q: u32) -> f64 {
        self.turn as f64 / q as f64
    }
}

/// Encoding of `D_q × K` elements as dense integers, used for bitsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Codec {
    pub q: u32,
    pub k_order: usize,
}

impl Codec {
    pub fn new(q: u32, k_order: usize) -> Codec {
        Codec { q, k_order }
    }

    pub fn size(&self) -> usize {
        2 * self.q as usize * self.k_order
    }

    #[inline]
    pub fn encode(&self, o: DElem, k: usize) -> usize {
        ((o.turn as usize * 2) + o.refl as usize) * self.k_order + k
    }

    #[inline]
    pub fn decode(&self, code: usize) -> (DElem, usize) {
        let k = code % self.k_order;
        let r = code / self.k_order;
        (
            DElem {
                turn: (r / 2) as u32,
                refl: r % 2 == 1,
            },
            k,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dihedral_rules() {
        let q = 12;
        let f = |t| DElem::reflection(t);
        let r = |t| DElem::rot(t);
        assert_eq!(r(3).mul(f(2), q), f(5));
        assert_eq!(f(3).mul(r(2), q), f(1));
        assert_eq!(f(3).mul(f(5), q), r(10));
        assert_eq!(f(4).conj_by(r(1), q), f(2));
        for a in 0..q {
            for refl in [false, true] {
                let x = DElem { turn: a, refl };
                assert_eq!(x.mul(x.inv(q), q), DElem::IDENTITY);
            }
        }
    }

    #[test]
    fn dihedral_group_is_associative() {
        let q = 6;
        let all: Vec<DElem> = (0..q)
            .flat_map(|t| [DElem::rot(t), DElem::reflection(t)])
            .collect();
        for &a in &all {
            for &b in &all {
                for &c in &all {
                    assert_eq!(a.mul(b, q).mul(c, q), a.mul(b.mul(c, q), q));
                }
            }
        }
    }

    #[test]
    fn epimorphisms() {
        assert_eq!(
            finite_epimorphism_targets(O2Closed::SO2),
            vec![(Quotient::Z(1), O2Closed::SO2)]
        );
        let o2 = finite_epimorphism_targets(O2Closed::O2);
        assert!(o2.contains(&(Quotient::Z(2), O2Closed::SO2)));
        let d4 = finite_epimorphism_targets(O2Closed::D(4));
        assert!(d4.contains(&(Quotient::D(2), O2Closed::Z(2))));
        assert!(d4.contains(&(Quotient::D(1), O2Closed::Z(4))));
        assert!(d4.contains(&(Quotient::Z(2), O2Closed::D(2))));
        assert!(d4.contains(&(Quotient::Z(1), O2Closed::D(4))));
    }

    #[test]
    fn codec_round_trip() {
        let c = Codec::new(8, 48);
        for code in 0..c.size() {
            let (o, k) = c.decode(code);
            assert_eq!(c.encode(o, k), code);
        }
    }
}
