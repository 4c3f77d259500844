//! The extremal constructions — disjoint balanced cliques, their hubbed
//! connected variant, general clique stars — and the closed-form counts of
//! their maximum independent sets.
//!
//! Vertex labeling convention: cliques are laid out consecutively, the hub
//! x₀ is vertex 0 (inside clique 0), and xᵢ is the first vertex of clique
//! `i`. Clique 0 always has order ⌈n/α⌉.

use std::collections::BTreeMap;

use crate::counting::independence_number;
use crate::error::{Error, Result};
use crate::graph::{iter_set, Graph, MAX_VERTICES};
use crate::iso::{are_isomorphic, canonical_form};

/// The special cutvertex x₀ of every construction built here.
pub const SPECIAL_CUTVERTEX: usize = 0;

/// Clique orders (n₀, …, n_{α−1}) of a clique star. The hub x₀ lives in
/// clique 0 and has exactly one neighbor in each other clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueStarProfile {
    sizes: Vec<usize>,
}

impl CliqueStarProfile {
    pub fn new(sizes: Vec<usize>) -> Result<Self> {
        if sizes.is_empty() || sizes.contains(&0) {
            return Err(Error::BadProfile);
        }
        let n: usize = sizes.iter().sum();
        if n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        Ok(CliqueStarProfile { sizes })
    }

    /// The balanced profile underlying G(n,α) and F(n,α): `n mod α` cliques
    /// of order ⌈n/α⌉ first, the rest of order ⌊n/α⌋.
    pub fn balanced(n: usize, alpha: usize) -> Result<Self> {
        if alpha == 0 || alpha > n {
            return Err(Error::InvalidAlpha { n, alpha });
        }
        if n > MAX_VERTICES {
            return Err(Error::OrderOutOfRange(n));
        }
        let q = n / alpha;
        let r = n % alpha;
        let sizes = (0..alpha).map(|i| if i < r { q + 1 } else { q }).collect();
        Ok(CliqueStarProfile { sizes })
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn order(&self) -> usize {
        self.sizes.iter().sum()
    }

    pub fn alpha(&self) -> usize {
        self.sizes.len()
    }
}

/// Disjoint cliques following the profile, no hub edges.
fn build_cliques(profile: &CliqueStarProfile) -> Graph {
    let n = profile.order();
    let mut edges = Vec::new();
    let mut base = 0;
    for &size in profile.sizes() {
        for u in base..base + size {
            for v in u + 1..base + size {
                edges.push((u, v));
            }
        }
        base += size;
    }
    Graph::new(n, &edges).expect("profile order is validated")
}

/// G(n,α): the disjoint union of α balanced cliques — the complement of the
/// Turán graph of order n and clique number α.
pub fn build_g(n: usize, alpha: usize) -> Result<Graph> {
    Ok(build_cliques(&CliqueStarProfile::balanced(n, alpha)?))
}

/// F(n,α): G(n,α) plus the hub edges x₀x₁, …, x₀x_{α−1}. The special
/// cutvertex x₀ is vertex [`SPECIAL_CUTVERTEX`].
pub fn build_f(n: usize, alpha: usize) -> Result<Graph> {
    if alpha >= n {
        return Err(Error::AlphaNotBelowOrder { n, alpha });
    }
    Ok(build_clique_star(&CliqueStarProfile::balanced(n, alpha)?))
}

/// The clique star of a profile: disjoint cliques plus one edge from the hub
/// x₀ to the first vertex of each other clique.
pub fn build_clique_star(profile: &CliqueStarProfile) -> Graph {
    let mut g = build_cliques(profile);
    let mut base = 0;
    for (i, &size) in profile.sizes().iter().enumerate() {
        if i > 0 {
            g = g
                .add_edge(SPECIAL_CUTVERTEX, base)
                .expect("hub edge endpoints are in range");
        }
        base += size;
    }
    g
}

fn checked_pow(base: u128, exp: usize) -> u128 {
    base.checked_pow(exp as u32)
        .expect("closed-form count overflowed 128 bits")
}

/// g(n,α) = ⌊n/α⌋^(α − n mod α) · ⌈n/α⌉^(n mod α), the number of maximum
/// independent sets of G(n,α).
pub fn g_formula(n: usize, alpha: usize) -> Result<u128> {
    if alpha == 0 || alpha > n {
        return Err(Error::InvalidAlpha { n, alpha });
    }
    let q = (n / alpha) as u128;
    let r = n % alpha;
    Ok(checked_pow(q, alpha - r)
        .checked_mul(checked_pow(q + 1, r))
        .expect("closed-form count overflowed 128 bits"))
}

/// f(n,α) = g(n−1,α) + Π over the attached cliques C₁…C_{α−1} of F(n,α) of
/// (|Cᵢ|−1), the number of maximum independent sets of F(n,α).
///
/// The product form replaces the exponent expression
/// (⌊n/α⌋−1)^(α−r) (⌈n/α⌉−1)^(r−1), which is undefined at r = 0; the two
/// agree wherever the latter is defined, and the product is 0 exactly when
/// n/α < 2.
pub fn f_formula(n: usize, alpha: usize) -> Result<u128> {
    if alpha >= n {
        return Err(Error::AlphaNotBelowOrder { n, alpha });
    }
    let profile = CliqueStarProfile::balanced(n, alpha)?;
    let hub_term = profile.sizes()[1..]
        .iter()
        .fold(1u128, |acc, &s| acc * (s as u128 - 1));
    Ok(g_formula(n - 1, alpha)?
        .checked_add(hub_term)
        .expect("closed-form count overflowed 128 bits"))
}

/// Closed-form count for a clique star: (n₀−1)·Π_{k≥1} n_k + Π_{k≥1}(n_k−1).
/// Valid whenever the built graph has independence number equal to the
/// number of cliques.
pub fn clique_star_count_formula(profile: &CliqueStarProfile) -> u128 {
    let sizes = profile.sizes();
    let prod: u128 = sizes[1..].iter().map(|&s| s as u128).product();
    let prod_minus: u128 = sizes[1..].iter().map(|&s| s as u128 - 1).product();
    (sizes[0] as u128 - 1)
        .checked_mul(prod)
        .and_then(|x| x.checked_add(prod_minus))
        .expect("closed-form count overflowed 128 bits")
}

/// All members of ℱ(n,α), pairwise non-isomorphic, in canonical-form order.
///
/// For n/α ≥ 2 this is {F(n,α)}, plus C₅ at (5,2). For n/α < 2 it is every
/// edge-superset of F(n,α) at x₀ whose residual G − x₀ is G(n−1,α) and whose
/// independence number is α, deduplicated by canonical form.
pub fn enumerate_family(n: usize, alpha: usize) -> Result<Vec<Graph>> {
    if alpha == 0 {
        return Err(Error::InvalidAlpha { n, alpha });
    }
    if alpha >= n {
        return Err(Error::AlphaNotBelowOrder { n, alpha });
    }
    let f = build_f(n, alpha)?;
    if n >= 2 * alpha {
        let mut members = vec![f];
        if (n, alpha) == (5, 2) {
            members.push(Graph::cycle(5)?);
        }
        members.sort_by_cached_key(canonical_form);
        return Ok(members);
    }

    let x0 = SPECIAL_CUTVERTEX;
    let optional: Vec<usize> = iter_set(f.full_set() & !f.closed_neighborhood(x0)).collect();
    let residual_target = build_g(n - 1, alpha)?;
    let mut members: BTreeMap<_, Graph> = BTreeMap::new();
    for mask in 0u64..(1 << optional.len()) {
        let mut h = f.clone();
        for (i, &v) in optional.iter().enumerate() {
            if mask & (1 << i) != 0 {
                h = h.add_edge(x0, v)?;
            }
        }
        if independence_number(&h) != alpha {
            continue;
        }
        if !are_isomorphic(&h.delete_vertex(x0)?, &residual_target) {
            continue;
        }
        members.entry(canonical_form(&h)).or_insert(h);
    }
    Ok(members.into_values().collect())
}

/// A named construction selectable at runtime.
pub trait Constructor: Sync {
    fn name(&self) -> &'static str;
    fn describe(&self) -> &'static str;
    fn build(&self, req: &ConstructRequest) -> Result<Vec<Graph>>;
}

/// Parameters shared by all constructions; each validates what it needs.
#[derive(Clone, Debug, Default)]
pub struct ConstructRequest {
    pub n: Option<usize>,
    pub alpha: Option<usize>,
    pub sizes: Option<Vec<usize>>,
}

impl ConstructRequest {
    fn n_alpha(&self, context: &'static str) -> Result<(usize, usize)> {
        let n = self.n.ok_or(Error::MissingFlag {
            flag: "--n",
            context,
        })?;
        let alpha = self.alpha.ok_or(Error::MissingFlag {
            flag: "--alpha",
            context,
        })?;
        if self.sizes.is_some() {
            return Err(Error::ConflictingFlag {
                flag: "--sizes",
                context,
            });
        }
        Ok((n, alpha))
    }
}

struct TuranComplement;

impl Constructor for TuranComplement {
    fn name(&self) -> &'static str {
        "G"
    }
    fn describe(&self) -> &'static str {
        "G(n,alpha): disjoint balanced cliques (Turán complement)"
    }
    fn build(&self, req: &ConstructRequest) -> Result<Vec<Graph>> {
        let (n, alpha) = req.n_alpha("construct --kind G")?;
        Ok(vec![build_g(n, alpha)?])
    }
}

struct HubbedCliques;

impl Constructor for HubbedCliques {
    fn name(&self) -> &'static str {
        "F"
    }
    fn describe(&self) -> &'static str {
        "F(n,alpha): G(n,alpha) plus hub edges from x0"
    }
    fn build(&self, req: &ConstructRequest) -> Result<Vec<Graph>> {
        let (n, alpha) = req.n_alpha("construct --kind F")?;
        Ok(vec![build_f(n, alpha)?])
    }
}

struct ExtremalFamily;

impl Constructor for ExtremalFamily {
    fn name(&self) -> &'static str {
        "family"
    }
    fn describe(&self) -> &'static str {
        "every member of the extremal family \u{2131}(n,alpha)"
    }
    fn build(&self, req: &ConstructRequest) -> Result<Vec<Graph>> {
        let (n, alpha) = req.n_alpha("construct --kind family")?;
        enumerate_family(n, alpha)
    }
}

struct CliqueStar;

impl Constructor for CliqueStar {
    fn name(&self) -> &'static str {
        "clique-star"
    }
    fn describe(&self) -> &'static str {
        "clique star from explicit --sizes s0,s1,..."
    }
    fn build(&self, req: &ConstructRequest) -> Result<Vec<Graph>> {
        let context = "construct --kind clique-star";
        let sizes = req.sizes.clone().ok_or(Error::MissingFlag {
            flag: "--sizes",
            context,
        })?;
        let profile = CliqueStarProfile::new(sizes)?;
        if req.n.is_some_and(|n| n != profile.order()) {
            return Err(Error::ConflictingFlag {
                flag: "--n",
                context,
            });
        }
        if req.alpha.is_some_and(|a| a != profile.alpha()) {
            return Err(Error::ConflictingFlag {
                flag: "--alpha",
                context,
            });
        }
        Ok(vec![build_clique_star(&profile)])
    }
}

/// Registry of the constructions, in CLI listing order.
pub const CONSTRUCTORS: &[&dyn Constructor] =
    &[&TuranComplement, &HubbedCliques, &ExtremalFamily, &CliqueStar];

/// Look up a construction by its registered name.
pub fn constructor(name: &str) -> Result<&'static dyn Constructor> {
    CONSTRUCTORS
        .iter()
        .find(|c| c.name() == name)
        .copied()
        .ok_or_else(|| Error::UnknownName {
            what: "construction kind",
            name: name.to_string(),
            known: CONSTRUCTORS
                .iter()
                .map(|c| c.name())
                .collect::<Vec<_>>()
                .join(", "),
        })
}
