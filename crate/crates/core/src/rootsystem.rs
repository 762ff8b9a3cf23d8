//! Root systems of the simple Lie algebras and the per-root constants
//! `c_λ(α) = (λ, α) / (ρ, α)`.
//!
//! Simple roots are numbered as in Bourbaki. The Cartan matrix is stored as
//! `a_ij = ⟨α_i^∨, α_j⟩`, so that the pairing of a root `β = Σ k_j α_j` with
//! the coroot `α_i^∨` is `Σ_j k_j a_ij`. Symmetrizers `d_i` are proportional to
//! `(α_i, α_i) / 2` and normalised so the short roots have `d_i = 1`.
//!
//! Positive roots are generated rather than tabulated: starting from the
//! simple roots, height `h + 1` is obtained from height `h` by the root-string
//! rule (`β + α_i` is a root iff `p - ⟨β, α_i^∨⟩ > 0`, where `p` is the length
//! of the `α_i`-string below `β`).

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinFamily {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl DynkinFamily {
    pub const ALL: [DynkinFamily; 7] = [
        DynkinFamily::A,
        DynkinFamily::B,
        DynkinFamily::C,
        DynkinFamily::D,
        DynkinFamily::E,
        DynkinFamily::F,
        DynkinFamily::G,
    ];

    fn rank_constraint(self) -> &'static str {
        match self {
            DynkinFamily::A => "expected rank >= 1",
            DynkinFamily::B | DynkinFamily::C => "expected rank >= 2",
            DynkinFamily::D => "expected rank >= 4",
            DynkinFamily::E => "expected rank 6, 7 or 8",
            DynkinFamily::F => "expected rank 4",
            DynkinFamily::G => "expected rank 2",
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            DynkinFamily::A => rank >= 1,
            DynkinFamily::B | DynkinFamily::C => rank >= 2,
            DynkinFamily::D => rank >= 4,
            DynkinFamily::E => (6..=8).contains(&rank),
            DynkinFamily::F => rank == 4,
            DynkinFamily::G => rank == 2,
        }
    }
}

impl fmt::Display for DynkinFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl FromStr for DynkinFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(DynkinFamily::A),
            "B" => Ok(DynkinFamily::B),
            "C" => Ok(DynkinFamily::C),
            "D" => Ok(DynkinFamily::D),
            "E" => Ok(DynkinFamily::E),
            "F" => Ok(DynkinFamily::F),
            "G" => Ok(DynkinFamily::G),
            _ => Err(Error::UnknownFamily(s.to_string())),
        }
    }
}

/// A simple Dynkin type such as `B_3` or `E_8`. Low-rank coincidences
/// (`B_1`, `C_1`, `D_2`, `D_3`, ...) are rejected rather than remapped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynkinType {
    family: DynkinFamily,
    rank: usize,
}

impl DynkinType {
    pub fn new(family: DynkinFamily, rank: usize) -> Result<Self> {
        if !family.admits(rank) {
            return Err(Error::RankOutOfRange {
                family,
                rank,
                expected: family.rank_constraint(),
            });
        }
        Ok(DynkinType { family, rank })
    }

    pub fn family(&self) -> DynkinFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Closed-form `|Φ⁺|`.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            DynkinFamily::A => n * (n + 1) / 2,
            DynkinFamily::B | DynkinFamily::C => n * n,
            DynkinFamily::D => n * (n - 1),
            DynkinFamily::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            DynkinFamily::F => 24,
            DynkinFamily::G => 6,
        }
    }

    /// Every valid type of rank at most `max_rank`, in family order.
    pub fn all_up_to(max_rank: usize) -> Vec<DynkinType> {
        DynkinFamily::ALL
            .iter()
            .flat_map(|&f| (1..=max_rank).filter_map(move |r| DynkinType::new(f, r).ok()))
            .collect()
    }

    /// Simple-root adjacency (0-based, Bourbaki numbering) and symmetrizers.
    fn diagram(&self) -> (Vec<(usize, usize)>, Vec<i64>) {
        let n = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i - 1, i)).collect::<Vec<_>>();
        match self.family {
            DynkinFamily::A => (chain(n), vec![1; n]),
            DynkinFamily::B => {
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (chain(n), d)
            }
            DynkinFamily::C => {
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (chain(n), d)
            }
            DynkinFamily::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (edges, vec![1; n])
            }
            DynkinFamily::E => {
                // 1-3-4-5-6(-7-8) with 2 attached to 4
                let mut edges = vec![(0, 2), (1, 3)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                (edges, vec![1; n])
            }
            DynkinFamily::F => (chain(4), vec![2, 2, 1, 1]),
            DynkinFamily::G => (chain(2), vec![1, 3]),
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A positive root, as its coordinates `(k_1, …, k_n)` in the basis of
/// simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root(Vec<u32>);

impl Root {
    pub fn coords(&self) -> &[u32] {
        &self.0
    }

    /// `Σ k_j`, the number of simple roots in `α` counted with multiplicity.
    pub fn height(&self) -> u32 {
        self.0.iter().sum()
    }

    fn simple(rank: usize, i: usize) -> Root {
        let mut k = vec![0; rank];
        k[i] = 1;
        Root(k)
    }
}

impl From<Vec<u32>> for Root {
    fn from(k: Vec<u32>) -> Self {
        Root(k)
    }
}

/// A dominant weight `λ = Σ m_i ω_i`, given by its coordinates in the basis
/// of fundamental weights (Bourbaki order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DominantWeight(Vec<u64>);

impl DominantWeight {
    pub fn new(coords: Vec<u64>) -> Self {
        DominantWeight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        DominantWeight(vec![0; rank])
    }

    /// The fundamental weight `ω_{i+1}` (index 0 is `ω_1`).
    ///
    /// Panics if `i >= rank`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        assert!(i < rank, "fundamental weight index {i} out of range for rank {rank}");
        let mut m = vec![0; rank];
        m[i] = 1;
        DominantWeight(m)
    }

    pub fn coords(&self) -> &[u64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    /// Every weight of the given rank with coordinates in `0..=max_coord`,
    /// in lexicographic order.
    pub fn all_bounded(rank: usize, max_coord: u64) -> Vec<DominantWeight> {
        let mut out = vec![Vec::with_capacity(rank)];
        for _ in 0..rank {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<u64>| {
                    (0..=max_coord).map(move |m| {
                        let mut next = prefix.clone();
                        next.push(m);
                        next
                    })
                })
                .collect();
        }
        out.into_iter().map(DominantWeight).collect()
    }
}

impl fmt::Display for DominantWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `ρ = ω_1 + ⋯ + ω_n`.
pub fn weyl_vector(rank: usize) -> DominantWeight {
    DominantWeight(vec![1; rank])
}

/// Cartan data and positive roots of a simple root system. Immutable once
/// built.
#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: DynkinType,
    cartan: Vec<Vec<i64>>,
    symmetrizers: Vec<i64>,
    positive_roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: DynkinType) -> Self {
        let n = ty.rank;
        let (edges, symmetrizers) = ty.diagram();

        // Symmetric form B_ij = (α_i, α_j) with (α_i, α_i) = 2 d_i; a bond
        // between i and j has B_ij = -max(d_i, d_j). Then a_ij = B_ij / d_i.
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(i, j) in &edges {
            let b = -symmetrizers[i].max(symmetrizers[j]);
            cartan[i][j] = b / symmetrizers[i];
            cartan[j][i] = b / symmetrizers[j];
        }

        let positive_roots = generate_positive_roots(&cartan);
        let index = positive_roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i))
            .collect();
        RootSystem {
            ty,
            cartan,
            symmetrizers,
            positive_roots,
            index,
        }
    }

    pub fn dynkin_type(&self) -> DynkinType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank
    }

    /// `a_ij = ⟨α_i^∨, α_j⟩`.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn symmetrizers(&self) -> &[i64] {
        &self.symmetrizers
    }

    /// `Φ⁺`, ordered by height and then by descending coordinates, so the
    /// simple roots come first as `α_1, α_2, …`.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn is_positive_root(&self, root: &Root) -> bool {
        self.index.contains_key(root)
    }

    /// Checks that `lambda` has one coordinate per simple root.
    pub fn check_weight(&self, lambda: &DominantWeight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::WeightLength {
                expected: self.rank(),
                got: lambda.rank(),
            });
        }
        Ok(())
    }

    /// `c_λ(α) = (λ, α) / (ρ, α)`.
    ///
    /// Since `(ω_i, α_j) = δ_ij d_j`, this is `Σ k_j d_j m_j / Σ k_j d_j` for
    /// `α = Σ k_j α_j`.
    pub fn c_lambda(&self, lambda: &DominantWeight, root: &Root) -> Result<BigRational> {
        self.check_weight(lambda)?;
        if !self.is_positive_root(root) {
            return Err(Error::NotAPositiveRoot(root.0.clone()));
        }
        Ok(weighted_ratio(&self.symmetrizers, lambda.coords(), root.coords()))
    }

    /// `c_λ(α)` for every positive root, in the order of
    /// [`positive_roots`](Self::positive_roots).
    pub fn c_values(&self, lambda: &DominantWeight) -> Result<Vec<BigRational>> {
        self.check_weight(lambda)?;
        Ok(self
            .positive_roots
            .iter()
            .map(|r| weighted_ratio(&self.symmetrizers, lambda.coords(), r.coords()))
            .collect())
    }
}

fn weighted_ratio(d: &[i64], m: &[u64], k: &[u32]) -> BigRational {
    let mut num = BigInt::from(0);
    let mut den = BigInt::from(0);
    for ((&dj, &mj), &kj) in d.iter().zip(m).zip(k) {
        let w = BigInt::from(dj) * kj;
        num += &w * mj;
        den += w;
    }
    BigRational::new(num, den)
}

fn generate_positive_roots(cartan: &[Vec<i64>]) -> Vec<Root> {
    let n = cartan.len();
    let mut known: HashSet<Root> = HashSet::new();
    let mut all = Vec::new();
    let mut level: Vec<Root> = (0..n).map(|i| Root::simple(n, i)).collect();

    while !level.is_empty() {
        level.sort_by(|a, b| b.cmp(a));
        known.extend(level.iter().cloned());
        let mut next: HashSet<Root> = HashSet::new();
        for beta in &level {
            for (i, row) in cartan.iter().enumerate() {
                let pairing: i64 = beta.0.iter().zip(row).map(|(&k, &a)| k as i64 * a).sum();
                // p = length of the α_i-string below β
                let mut p = 0i64;
                let mut down = beta.clone();
                while down.0[i] > 0 {
                    down.0[i] -= 1;
                    if !known.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up.0[i] += 1;
                    next.insert(up);
                }
            }
        }
        all.append(&mut level);
        level = next.into_iter().collect();
    }
    all
}
