//! The compatibility relations between a product `∗` and an associative
//! product `·`: checkers with witnesses, linear solvers for the full space
//! of related bilinear products, and an associativity certificate for such
//! spaces.

mod audit;
mod check;
mod identity;
mod members;
mod solve;

pub use audit::{total_compatibility_audit, AuditReport};
pub use check::{check, check_compatible_dual, sum_product, CompatReport, Witness};
pub use identity::{CompatKind, Identity, Term};
pub use members::{
    all_members_associative, all_members_associative_with_cap, enumeration_cap, MemberWitness, DEFAULT_ENUM_CAP,
};
pub use solve::{solve_linear, solve_linear_with, ProductSpace};
