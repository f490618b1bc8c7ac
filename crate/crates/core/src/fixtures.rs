//! Named input fixtures shipped with the crate.
//!
//! The files live in the repository's `fixtures/` directory and are embedded
//! here so `fixtures list` and the test suites work from any directory.

use serde::Serialize;

/// What a fixture file contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixtureKind {
    CurveBoundary,
    DualGraph,
    Arrangement,
    ThresholdTable,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Fixture {
    pub name: &'static str,
    pub kind: FixtureKind,
    pub path: &'static str,
    pub description: &'static str,
    #[serde(skip)]
    pub contents: &'static str,
}

macro_rules! fixture {
    ($name:literal, $kind:ident, $file:literal, $desc:literal) => {
        Fixture {
            name: $name,
            kind: FixtureKind::$kind,
            path: concat!("fixtures/", $file),
            description: $desc,
            contents: include_str!(concat!("../../../fixtures/", $file)),
        }
    };
}

const FIXTURES: &[Fixture] = &[
    fixture!("A1", DualGraph, "A1.json", "single (-2)-curve"),
    fixture!("A2", DualGraph, "A2.json", "chain of 2 (-2)-curves"),
    fixture!("A3", DualGraph, "A3.json", "chain of 3 (-2)-curves"),
    fixture!("A4", DualGraph, "A4.json", "chain of 4 (-2)-curves"),
    fixture!("A5", DualGraph, "A5.json", "chain of 5 (-2)-curves"),
    fixture!("A6", DualGraph, "A6.json", "chain of 6 (-2)-curves"),
    fixture!("A7", DualGraph, "A7.json", "chain of 7 (-2)-curves"),
    fixture!("A8", DualGraph, "A8.json", "chain of 8 (-2)-curves"),
    fixture!("D4", DualGraph, "D4.json", "star of (-2)-curves with legs 1,1,1"),
    fixture!("D5", DualGraph, "D5.json", "star of (-2)-curves with legs 1,1,2"),
    fixture!("D6", DualGraph, "D6.json", "star of (-2)-curves with legs 1,1,3"),
    fixture!("D7", DualGraph, "D7.json", "star of (-2)-curves with legs 1,1,4"),
    fixture!("D8", DualGraph, "D8.json", "star of (-2)-curves with legs 1,1,5"),
    fixture!("E6", DualGraph, "E6.json", "star of (-2)-curves with legs 1,2,2"),
    fixture!("E7", DualGraph, "E7.json", "star of (-2)-curves with legs 1,2,3"),
    fixture!("E8", DualGraph, "E8.json", "star of (-2)-curves with legs 1,2,4"),
    fixture!(
        "fibration-b3",
        DualGraph,
        "fibration_b3.json",
        "central fiber of a P^1-fibration over a curve germ (b = 3); negative \
         semidefinite, with two negative definite log terminal halves around \
         the (-1)-curve m"
    ),
    fixture!("curve-233", CurveBoundary, "curve_233.json", "points with multiplicities (2,3,3)"),
    fixture!("curve-234", CurveBoundary, "curve_234.json", "points with multiplicities (2,3,4)"),
    fixture!("curve-235", CurveBoundary, "curve_235.json", "points with multiplicities (2,3,5)"),
    fixture!("curve-236", CurveBoundary, "curve_236.json", "points with multiplicities (2,3,6)"),
    fixture!("curve-244", CurveBoundary, "curve_244.json", "points with multiplicities (2,4,4)"),
    fixture!("curve-333", CurveBoundary, "curve_333.json", "points with multiplicities (3,3,3)"),
    fixture!(
        "curve-2222",
        CurveBoundary,
        "curve_2222.json",
        "four points of multiplicity 2"
    ),
    fixture!(
        "ce8-r7",
        Arrangement,
        "arrangement_ce8_r7.json",
        "four general-position lines on P^2 with coefficients 1/2, 2/3, 4/5, 6/7: \
         the different of the weighted blow-up of the quasi-homogeneous cE8 \
         singularity with r = 7; minimal complement index 6"
    ),
    fixture!(
        "lct-constant",
        ThresholdTable,
        "lct_constant.json",
        "one divisor meets F: sigma is constant 1, alpha0 = 1"
    ),
    fixture!(
        "lct-vee",
        ThresholdTable,
        "lct_vee.json",
        "two opposite drift rows: sigma = 1 - alpha on [0, 1]"
    ),
    fixture!(
        "lct-two-piece",
        ThresholdTable,
        "lct_two_piece.json",
        "S stays critical exactly on [0, 1/3]: sigma = min(alpha, (1-alpha)/2), \
         alpha0 = 1/3"
    ),
];

/// The on-disk copy of the fixture index, kept in sync with [`all`].
pub const MANIFEST: &str = include_str!("../../../fixtures/manifest.json");

pub fn all() -> &'static [Fixture] {
    FIXTURES
}

pub fn find(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}
