//! The catalog of identities the verifier knows how to check.
//!
//! Every identity couples a left side (a determinant family, a Hankel
//! determinant, or a sequence relation) with a closed-form right side, a
//! set of evaluation routes, and the index range on which the statement
//! holds. The id strings are the public names the command line accepts.

use crate::error::{Error, Result};
use crate::paths::PathFamily;
use crate::sequences::SequenceId;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Route {
    /// Expansion recurrence for Hessenberg determinants; direct dense
    /// elimination where the matrix is not Hessenberg.
    Recurrence,
    /// Expansion as a sum over integer partitions with multinomial weights.
    TrudiPartition,
    /// Expansion as a signed sum over integer compositions.
    TrudiComposition,
    /// Coefficient extraction from the kernel quotient f = g/(1-g).
    Series,
    /// Exhaustive generation of the associated lattice path family.
    Enumeration,
}

impl Route {
    pub const ALL: [Route; 5] = [
        Route::Recurrence,
        Route::TrudiPartition,
        Route::TrudiComposition,
        Route::Series,
        Route::Enumeration,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Route::Recurrence => "recurrence",
            Route::TrudiPartition => "trudi-partition",
            Route::TrudiComposition => "trudi-composition",
            Route::Series => "series",
            Route::Enumeration => "enumeration",
        }
    }

    pub fn parse(s: &str) -> Result<Route> {
        let norm = s.trim().to_ascii_lowercase().replace(['-', '_'], "");
        Route::ALL
            .iter()
            .copied()
            .find(|r| r.tag().replace('-', "") == norm)
            .ok_or_else(|| Error::UnknownId(format!("route {s:?}")))
    }

    /// Largest order the route is run at, independent of any identity's
    /// own bound. The expansion routes grow by partition and composition
    /// counts, enumeration by path counts.
    pub fn cap(&self) -> Option<usize> {
        match self {
            Route::TrudiPartition => Some(18),
            Route::TrudiComposition => Some(14),
            Route::Enumeration => Some(8),
            _ => None,
        }
    }
}

/// What the left side of an identity is.
#[derive(Clone, Copy, Debug)]
pub enum LhsKind {
    /// Order-n determinant with superdiagonal `a0` and entry `a_i` the
    /// sequence value at index `first + i - 1`.
    Det {
        a0: i64,
        seq: SequenceId,
        first: usize,
    },
    /// Order-n determinant of the matrix with entry `seq[i + j + offset]`.
    Hankel { seq: SequenceId, offset: usize },
    /// `(-1)^(n-1)` times the order-n determinant with superdiagonal 1 and
    /// Catalan entries `C_0 .. C_{n-1}`.
    CatalanEntryDet,
    /// Both sides computed by a named sequence relation.
    Relation(RelationKind),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelationKind {
    /// `C_n = 2 t_{n+1} + t_n`.
    CatalanFine,
    /// `S_n = sum_k binomial(n+k, 2k) C_k`.
    SchroederCatalan,
    /// Fine numbers from the Catalan convolution recurrence.
    FineConv,
    /// `t_{n+1} = (1/2) sum_{k=2}^{n} C_k / (-2)^(n-k)`.
    FineHalf,
    /// `S_n = 2 s_n` away from n = 0.
    SmallIsHalf,
}

/// What the right side evaluates to at order n.
#[derive(Clone, Copy, Debug)]
pub enum RhsKind {
    /// `scale * (-1)^(n-1)? * seq[n + shift]`.
    Seq {
        seq: SequenceId,
        shift: i64,
        alternating: bool,
        scale: i64,
    },
    /// `2^binomial(n + shift, 2)`.
    TwoPowTriangular { shift: usize },
    One,
    OneMinusN,
    /// The relation on the left computes both sides itself.
    RelationRhs,
}

/// Enumeration route: which path family realizes the determinant, and
/// whether its members are counted with signs.
#[derive(Clone, Copy, Debug)]
pub struct EnumEval {
    pub family: PathFamily,
    pub signed: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct IdentitySpec {
    pub id: &'static str,
    pub summary: &'static str,
    /// Smallest n the statement holds at.
    pub valid_from: usize,
    /// Largest n the default run checks; also a hard bound when a right
    /// side is only computable so far.
    pub default_max_n: usize,
    pub lhs: LhsKind,
    pub rhs: RhsKind,
    pub routes: &'static [Route],
    pub enumeration: Option<EnumEval>,
}

use PathFamily as F;
use Route as R;
use SequenceId as S;

const DET_ROUTES: &[Route] = &[R::Recurrence, R::Series, R::Enumeration];
const EXPANSION_ROUTES: &[Route] = &[R::TrudiPartition, R::TrudiComposition];
const DIRECT: &[Route] = &[R::Recurrence];

const fn seq_rhs(seq: SequenceId, shift: i64, alternating: bool, scale: i64) -> RhsKind {
    RhsKind::Seq {
        seq,
        shift,
        alternating,
        scale,
    }
}

const fn enum_eval(family: PathFamily, signed: bool) -> Option<EnumEval> {
    Some(EnumEval { family, signed })
}

pub static IDENTITIES: &[IdentitySpec] = &[
    // determinants over large Schroder entries
    IdentitySpec {
        id: "thm1.e1",
        summary: "superdiagonal +1, entries S_1..S_n: alternating large Schroder numbers",
        valid_from: 2,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::LargeSchroeder, first: 1 },
        rhs: seq_rhs(S::LargeSchroeder, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::A, true),
    },
    IdentitySpec {
        id: "thm1.e2",
        summary: "superdiagonal -1, entries S_1..S_n: twice a134425",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: -1, seq: S::LargeSchroeder, first: 1 },
        rhs: seq_rhs(S::A134425, -1, false, 2),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::A, false),
    },
    IdentitySpec {
        id: "thm1.e3",
        summary: "superdiagonal +1, entries S_0..S_{n-1}: alternating small Schroder numbers",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::LargeSchroeder, first: 0 },
        rhs: seq_rhs(S::SmallSchroeder, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::B, true),
    },
    IdentitySpec {
        id: "thm1.e4",
        summary: "superdiagonal -1, entries S_0..S_{n-1}: small Schroder numbers",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: -1, seq: S::LargeSchroeder, first: 0 },
        rhs: seq_rhs(S::SmallSchroeder, 0, false, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::B, false),
    },
    IdentitySpec {
        id: "thm1.e5",
        summary: "superdiagonal +1, entries s_1..s_n: alternating large Schroder numbers",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::SmallSchroeder, first: 1 },
        rhs: seq_rhs(S::LargeSchroeder, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Aprime, true),
    },
    IdentitySpec {
        id: "thm1.e6",
        summary: "superdiagonal -1, entries s_1..s_n: a225887",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: -1, seq: S::SmallSchroeder, first: 1 },
        rhs: seq_rhs(S::A225887, -1, false, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Aprime, false),
    },
    IdentitySpec {
        id: "thm1.e7",
        summary: "superdiagonal +1, entries s_0..s_{n-1}: alternating a114710",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::SmallSchroeder, first: 0 },
        rhs: seq_rhs(S::A114710, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Bprime, true),
    },
    IdentitySpec {
        id: "thm1.e8",
        summary: "superdiagonal -1, entries s_0..s_{n-1}: large Schroder numbers",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: -1, seq: S::SmallSchroeder, first: 0 },
        rhs: seq_rhs(S::LargeSchroeder, -1, false, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Bprime, false),
    },
    IdentitySpec {
        id: "thm1.e9",
        summary: "superdiagonal +1, entries s_2..s_{n+1}: alternating large Schroder numbers",
        valid_from: 2,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::SmallSchroeder, first: 2 },
        rhs: seq_rhs(S::LargeSchroeder, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Jtuple, true),
    },
    // the same nine statements, checked through the expansion formulas
    IdentitySpec {
        id: "thm2.e13",
        summary: "expansion routes for thm1.e1",
        valid_from: 2,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: 1, seq: S::LargeSchroeder, first: 1 },
        rhs: seq_rhs(S::LargeSchroeder, -1, true, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e14",
        summary: "expansion routes for thm1.e2",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: -1, seq: S::LargeSchroeder, first: 1 },
        rhs: seq_rhs(S::A134425, -1, false, 2),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e15",
        summary: "expansion routes for thm1.e3",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: 1, seq: S::LargeSchroeder, first: 0 },
        rhs: seq_rhs(S::SmallSchroeder, -1, true, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e16",
        summary: "expansion routes for thm1.e4",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: -1, seq: S::LargeSchroeder, first: 0 },
        rhs: seq_rhs(S::SmallSchroeder, 0, false, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e17",
        summary: "expansion routes for thm1.e5",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: 1, seq: S::SmallSchroeder, first: 1 },
        rhs: seq_rhs(S::LargeSchroeder, -1, true, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e18",
        summary: "expansion routes for thm1.e6",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: -1, seq: S::SmallSchroeder, first: 1 },
        rhs: seq_rhs(S::A225887, -1, false, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e19",
        summary: "expansion routes for thm1.e7",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: 1, seq: S::SmallSchroeder, first: 0 },
        rhs: seq_rhs(S::A114710, -1, true, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e20",
        summary: "expansion routes for thm1.e8",
        valid_from: 1,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: -1, seq: S::SmallSchroeder, first: 0 },
        rhs: seq_rhs(S::LargeSchroeder, -1, false, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    IdentitySpec {
        id: "thm2.e21",
        summary: "expansion routes for thm1.e9",
        valid_from: 2,
        default_max_n: 18,
        lhs: LhsKind::Det { a0: 1, seq: S::SmallSchroeder, first: 2 },
        rhs: seq_rhs(S::LargeSchroeder, -1, true, 1),
        routes: EXPANSION_ROUTES,
        enumeration: None,
    },
    // determinants over Fine entries
    IdentitySpec {
        id: "thm3.e22",
        summary: "superdiagonal +1, entries t_1..t_n: the u-sequence",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::Fine, first: 1 },
        rhs: seq_rhs(S::U, 0, false, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Dprime, true),
    },
    IdentitySpec {
        id: "thm3.e23",
        summary: "superdiagonal -1, entries t_1..t_n: Catalan numbers",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: -1, seq: S::Fine, first: 1 },
        rhs: seq_rhs(S::Catalan, -1, false, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Dprime, false),
    },
    IdentitySpec {
        id: "thm3.e24",
        summary: "superdiagonal +1, entries t_2..t_{n+1}: alternating Catalan numbers",
        valid_from: 2,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::Fine, first: 2 },
        rhs: seq_rhs(S::Catalan, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::L, true),
    },
    IdentitySpec {
        id: "thm3.e25",
        summary: "superdiagonal -1, entries t_2..t_{n+1}: a137398",
        valid_from: 1,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: -1, seq: S::Fine, first: 2 },
        rhs: seq_rhs(S::A137398, 0, false, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::L, false),
    },
    IdentitySpec {
        id: "thm3.e26",
        summary: "superdiagonal +1, entries t_3..t_{n+2}: alternating a030238",
        valid_from: 1,
        default_max_n: 12,
        lhs: LhsKind::Det { a0: 1, seq: S::Fine, first: 3 },
        rhs: seq_rhs(S::A030238, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Mtuple, true),
    },
    IdentitySpec {
        id: "thm3.e27",
        summary: "superdiagonal +1, entries t_4..t_{n+3}: alternating Catalan numbers",
        valid_from: 3,
        default_max_n: 25,
        lhs: LhsKind::Det { a0: 1, seq: S::Fine, first: 4 },
        rhs: seq_rhs(S::Catalan, -1, true, 1),
        routes: DET_ROUTES,
        enumeration: enum_eval(F::Ttuple, true),
    },
    // Hankel determinants
    IdentitySpec {
        id: "hankel.schroeder0",
        summary: "Hankel determinant of S_0, S_1, ...: powers of two",
        valid_from: 1,
        default_max_n: 7,
        lhs: LhsKind::Hankel { seq: S::LargeSchroeder, offset: 0 },
        rhs: RhsKind::TwoPowTriangular { shift: 0 },
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "hankel.schroeder1",
        summary: "Hankel determinant of S_1, S_2, ...: powers of two",
        valid_from: 1,
        default_max_n: 7,
        lhs: LhsKind::Hankel { seq: S::LargeSchroeder, offset: 1 },
        rhs: RhsKind::TwoPowTriangular { shift: 1 },
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "hankel.fine1",
        summary: "Hankel determinant of t_1, t_2, ...: constant one",
        valid_from: 1,
        default_max_n: 7,
        lhs: LhsKind::Hankel { seq: S::Fine, offset: 1 },
        rhs: RhsKind::One,
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "hankel.fine2",
        summary: "Hankel determinant of t_2, t_3, ...: 1 - n",
        valid_from: 1,
        default_max_n: 7,
        lhs: LhsKind::Hankel { seq: S::Fine, offset: 2 },
        rhs: RhsKind::OneMinusN,
        routes: DIRECT,
        enumeration: None,
    },
    // the Catalan-entry determinant that lands on Fine numbers
    IdentitySpec {
        id: "deutsch.eq1",
        summary: "signed determinant with Catalan entries: Fine numbers",
        valid_from: 1,
        default_max_n: 15,
        lhs: LhsKind::CatalanEntryDet,
        rhs: seq_rhs(S::Fine, 0, false, 1),
        routes: DIRECT,
        enumeration: None,
    },
    // sequence relations
    IdentitySpec {
        id: "rel.catalan_fine",
        summary: "C_n = 2 t_{n+1} + t_n",
        valid_from: 1,
        default_max_n: 40,
        lhs: LhsKind::Relation(RelationKind::CatalanFine),
        rhs: RhsKind::RelationRhs,
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "rel.schroeder_catalan",
        summary: "S_n as a binomial sum of Catalan numbers",
        valid_from: 0,
        default_max_n: 40,
        lhs: LhsKind::Relation(RelationKind::SchroederCatalan),
        rhs: RhsKind::RelationRhs,
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "rel.fine_conv",
        summary: "Fine numbers from the Catalan convolution recurrence",
        valid_from: 0,
        default_max_n: 40,
        lhs: LhsKind::Relation(RelationKind::FineConv),
        rhs: RhsKind::RelationRhs,
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "rel.fine_half",
        summary: "t_{n+1} as half an alternating Catalan sum",
        valid_from: 1,
        default_max_n: 40,
        lhs: LhsKind::Relation(RelationKind::FineHalf),
        rhs: RhsKind::RelationRhs,
        routes: DIRECT,
        enumeration: None,
    },
    IdentitySpec {
        id: "rel.small_is_half",
        summary: "S_n = 2 s_n away from n = 0",
        valid_from: 1,
        default_max_n: 40,
        lhs: LhsKind::Relation(RelationKind::SmallIsHalf),
        rhs: RhsKind::RelationRhs,
        routes: DIRECT,
        enumeration: None,
    },
];

/// Short names accepted for the Fine-entry determinant block.
pub static ALIASES: &[(&str, &str)] = &[
    ("thm3.e1", "thm3.e22"),
    ("thm3.e2", "thm3.e23"),
    ("thm3.e3", "thm3.e24"),
    ("thm3.e4", "thm3.e25"),
    ("thm3.e5", "thm3.e26"),
    ("thm3.e6", "thm3.e27"),
];

pub fn all_identities() -> &'static [IdentitySpec] {
    IDENTITIES
}

pub fn lookup(id: &str) -> Result<&'static IdentitySpec> {
    let wanted = ALIASES
        .iter()
        .find(|(alias, _)| *alias == id)
        .map(|(_, target)| *target)
        .unwrap_or(id);
    IDENTITIES
        .iter()
        .find(|spec| spec.id == wanted)
        .ok_or_else(|| Error::UnknownId(format!("identity {id:?}")))
}
