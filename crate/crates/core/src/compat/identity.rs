use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::Product;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// The five relations between a product `∗` and a fixed product `·`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CompatKind {
    Compatible,
    /// σ = id.
    IdMatching,
    /// σ = (12).
    SwapMatching,
    Interchangeable,
    TotallyCompatible,
}

impl CompatKind {
    pub const ALL: [CompatKind; 5] = [
        CompatKind::Compatible,
        CompatKind::IdMatching,
        CompatKind::SwapMatching,
        CompatKind::Interchangeable,
        CompatKind::TotallyCompatible,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CompatKind::Compatible => "compatible",
            CompatKind::IdMatching => "id-matching",
            CompatKind::SwapMatching => "swap-matching",
            CompatKind::Interchangeable => "interchangeable",
            CompatKind::TotallyCompatible => "totally-compatible",
        }
    }

    /// The identities defining the relation, in the fixed reporting order.
    pub fn identities(self) -> &'static [Identity] {
        use Term::*;
        const COMPATIBLE: [Identity; 1] = [Identity {
            lhs: &[StarDotLeft, DotStarLeft],
            rhs: &[StarDotRight, DotStarRight],
        }];
        const ID: [Identity; 2] = [
            Identity::pair(StarDotLeft, StarDotRight),
            Identity::pair(DotStarLeft, DotStarRight),
        ];
        const SWAP: [Identity; 2] = [
            Identity::pair(StarDotLeft, DotStarRight),
            Identity::pair(DotStarLeft, StarDotRight),
        ];
        const INTER: [Identity; 2] = [
            Identity::pair(StarDotLeft, DotStarLeft),
            Identity::pair(StarDotRight, DotStarRight),
        ];
        const TOTAL: [Identity; 3] = [
            Identity::pair(StarDotLeft, DotStarLeft),
            Identity::pair(DotStarLeft, DotStarRight),
            Identity::pair(DotStarRight, StarDotRight),
        ];
        match self {
            CompatKind::Compatible => &COMPATIBLE,
            CompatKind::IdMatching => &ID,
            CompatKind::SwapMatching => &SWAP,
            CompatKind::Interchangeable => &INTER,
            CompatKind::TotallyCompatible => &TOTAL,
        }
    }
}

impl fmt::Display for CompatKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CompatKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CompatKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown kind `{s}`")))
    }
}

/// A mixed triple product of basis elements `a, b, c`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Term {
    /// `(a ∗ b) · c`
    StarDotLeft,
    /// `(a · b) ∗ c`
    DotStarLeft,
    /// `a ∗ (b · c)`
    StarDotRight,
    /// `a · (b ∗ c)`
    DotStarRight,
}

impl Term {
    pub fn render(self) -> &'static str {
        match self {
            Term::StarDotLeft => "(a*b).c",
            Term::DotStarLeft => "(a.b)*c",
            Term::StarDotRight => "a*(b.c)",
            Term::DotStarRight => "a.(b*c)",
        }
    }

    /// Dense value on the basis triple `(i, j, k)`.
    pub fn eval(self, star: &Product, dot: &Product, i: usize, j: usize, k: usize) -> Vec<Scalar> {
        match self {
            Term::StarDotLeft => dot.mul_right_basis(&star.basis_product_dense(i, j), k),
            Term::DotStarLeft => star.mul_right_basis(&dot.basis_product_dense(i, j), k),
            Term::StarDotRight => star.mul_left_basis(i, &dot.basis_product_dense(j, k)),
            Term::DotStarRight => dot.mul_left_basis(i, &star.basis_product_dense(j, k)),
        }
    }

    /// The term is linear in `∗` once `·` is fixed. Emits, for output
    /// coordinate `t`, the coefficient of each unknown `∗` coordinate
    /// `(p, q, r) ↦ (p * n + q) * n + r` via `emit(t, unknown, coeff)`.
    pub(crate) fn linearize<F>(self, dot: &Product, i: usize, j: usize, k: usize, mut emit: F)
    where
        F: FnMut(usize, usize, &Scalar),
    {
        let n = dot.dim();
        let var = |p: usize, q: usize, r: usize| (p * n + q) * n + r;
        match self {
            // Σ_m ∗[i][j][m] ·[m][k][t]
            Term::StarDotLeft => {
                for m in 0..n {
                    for (t, c) in dot.basis_product(m, k) {
                        emit(*t, var(i, j, m), c);
                    }
                }
            }
            // Σ_m ·[i][j][m] ∗[m][k][t]
            Term::DotStarLeft => {
                for (m, c) in dot.basis_product(i, j) {
                    for t in 0..n {
                        emit(t, var(*m, k, t), c);
                    }
                }
            }
            // Σ_m ·[j][k][m] ∗[i][m][t]
            Term::StarDotRight => {
                for (m, c) in dot.basis_product(j, k) {
                    for t in 0..n {
                        emit(t, var(i, *m, t), c);
                    }
                }
            }
            // Σ_m ∗[j][k][m] ·[i][m][t]
            Term::DotStarRight => {
                for m in 0..n {
                    for (t, c) in dot.basis_product(i, m) {
                        emit(*t, var(j, k, m), c);
                    }
                }
            }
        }
    }
}

/// `Σ lhs = Σ rhs`, each side a sum of mixed triple products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Identity {
    pub lhs: &'static [Term],
    pub rhs: &'static [Term],
}

impl Identity {
    const fn pair(l: Term, r: Term) -> Identity {
        let lhs: &'static [Term] = match l {
            Term::StarDotLeft => &[Term::StarDotLeft],
            Term::DotStarLeft => &[Term::DotStarLeft],
            Term::StarDotRight => &[Term::StarDotRight],
            Term::DotStarRight => &[Term::DotStarRight],
        };
        let rhs: &'static [Term] = match r {
            Term::StarDotLeft => &[Term::StarDotLeft],
            Term::DotStarLeft => &[Term::DotStarLeft],
            Term::StarDotRight => &[Term::StarDotRight],
            Term::DotStarRight => &[Term::DotStarRight],
        };
        Identity { lhs, rhs }
    }

    pub fn render(&self) -> String {
        let side = |ts: &[Term]| ts.iter().map(|t| t.render()).collect::<Vec<_>>().join(" + ");
        format!("{} = {}", side(self.lhs), side(self.rhs))
    }

    /// Both sides evaluated on the basis triple.
    pub fn sides(&self, star: &Product, dot: &Product, i: usize, j: usize, k: usize) -> (Vec<Scalar>, Vec<Scalar>) {
        let side = |ts: &[Term]| {
            let mut acc = crate::linalg::zero_vector(dot.field(), dot.dim());
            for t in ts {
                for (a, b) in acc.iter_mut().zip(t.eval(star, dot, i, j, k)) {
                    *a += &b;
                }
            }
            acc
        };
        (side(self.lhs), side(self.rhs))
    }
}
