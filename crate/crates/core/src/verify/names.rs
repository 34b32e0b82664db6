//! Names of the inequalities evaluated by the harness.

pub const HB_LE_2SL: &str = "hyperbolicity ≤ 2·slimness + 1/2";
pub const SL_LE_3HB: &str = "slimness ≤ 3·hyperbolicity + 1/2";
pub const SL_LE_HALF_MAX_CLUSTER: &str = "slimness ≤ floor(maxClusterDiam/2)";
pub const SL_LE_THREE_HALVES_CLUSTER: &str = "slimness ≤ floor(3·clusterDiam_s/2) ∀s";
pub const DISTINCT_LE_UNRESTRICTED: &str = "distinct-triple slimness ≤ slimness";
pub const CLUSTER_MAX_LE_3_CLUSTER_MIN: &str = "clusterDiam_q ≤ 3·clusterDiam_s ∀q,s";
pub const TL_GE_CLUSTER_THIRD: &str = "ceil(clusterDiam_s/3) ≤ treeLength ∀s";
pub const TL_LE_CLUSTER_PLUS_ONE: &str = "treeLength ≤ clusterDiam_s + 1 ∀s";
pub const ONE_LE_TB: &str = "1 ≤ treeBreadth";
pub const TB_LE_TL: &str = "treeBreadth ≤ treeLength";
pub const TL_LE_2TB: &str = "treeLength ≤ 2·treeBreadth";
pub const SL_LE_THREE_HALVES_TL: &str = "slimness ≤ floor(3·treeLength/2)";
pub const SL_LE_3TB: &str = "slimness ≤ 3·treeBreadth";
pub const CLUSTER_LE_HALF_CHORDALITY: &str = "clusterDiam_s ≤ chordality/2 + 2 ∀s";
pub const SL_LE_CHORDALITY_QUARTER: &str = "slimness ≤ floor(chordality/4) + 1";
pub const FOUR_CHORDAL_SL: &str = "4-chordal ⇒ slimness ≤ 2";
pub const CHORDAL_SL: &str = "chordal ⇒ slimness ≤ 1";
pub const CHORDAL_HB: &str = "chordal ⇒ hyperbolicity ≤ 1";
pub const AT_FREE_SL: &str = "AT-free ⇒ slimness ≤ 1";
pub const HHD_FREE_SL: &str = "HHD-free ⇒ slimness ≤ 1";
pub const HHD_FREE_HEREDITARY: &str = "HHD-free ⇒ every induced subgraph has slimness ≤ 1";
pub const BLOCK_IFF_SL_ZERO: &str = "blockGraph ⇔ slimness 0";

/// Every name, in report order.
pub const ALL: [&str; 22] = [
    HB_LE_2SL,
    SL_LE_3HB,
    SL_LE_HALF_MAX_CLUSTER,
    SL_LE_THREE_HALVES_CLUSTER,
    DISTINCT_LE_UNRESTRICTED,
    CLUSTER_MAX_LE_3_CLUSTER_MIN,
    TL_GE_CLUSTER_THIRD,
    TL_LE_CLUSTER_PLUS_ONE,
    ONE_LE_TB,
    TB_LE_TL,
    TL_LE_2TB,
    SL_LE_THREE_HALVES_TL,
    SL_LE_3TB,
    CLUSTER_LE_HALF_CHORDALITY,
    SL_LE_CHORDALITY_QUARTER,
    FOUR_CHORDAL_SL,
    CHORDAL_SL,
    CHORDAL_HB,
    AT_FREE_SL,
    HHD_FREE_SL,
    HHD_FREE_HEREDITARY,
    BLOCK_IFF_SL_ZERO,
];
