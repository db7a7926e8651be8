//! Varieties reachable by id.

use std::fmt;

use qspectra_core::algebra::{jacobi_ring, qh_ig2, qh_projective, DynkinType, FiniteCommAlgebra};
use qspectra_core::schur::qh_grassmannian;
use qspectra_core::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provider {
    Projective(usize),
    Grassmannian(usize, usize),
    Isotropic(usize),
    Jacobi(DynkinType),
}

impl Provider {
    pub fn build(self) -> Result<FiniteCommAlgebra> {
        match self {
            Self::Projective(n) => qh_projective(n),
            Self::Grassmannian(k, n) => qh_grassmannian(k, n),
            Self::Isotropic(n) => qh_ig2(n),
            Self::Jacobi(t) => jacobi_ring(t),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarietyDescriptor {
    pub id: String,
    pub display_name: String,
    pub provider: Provider,
    pub fano_index: usize,
    pub dim_x: usize,
}

impl VarietyDescriptor {
    fn new(provider: Provider) -> Self {
        let (id, display_name, fano_index, dim_x) = match provider {
            Provider::Projective(n) => (format!("P{n}"), format!("projective space P^{n}"), n + 1, n),
            Provider::Grassmannian(k, n) => (
                format!("G({k},{n})"),
                format!("Grassmannian of {k}-planes in {n}-space"),
                n,
                k * (n - k),
            ),
            Provider::Isotropic(n) => (
                format!("IG(2,{})", 2 * n),
                format!("isotropic Grassmannian of planes in symplectic {}-space", 2 * n),
                2 * n - 1,
                4 * n - 5,
            ),
            Provider::Jacobi(t) => (t.to_string(), format!("Jacobi ring of the {t} singularity"), 1, 0),
        };
        Self {
            id,
            display_name,
            provider,
            fano_index,
            dim_x,
        }
    }

    pub fn build(&self) -> Result<FiniteCommAlgebra> {
        self.provider.build()
    }

    pub fn is_jacobi(&self) -> bool {
        matches!(self.provider, Provider::Jacobi(_))
    }
}

impl fmt::Display for VarietyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<8} {} (index {}, dim {})",
            self.id, self.display_name, self.fano_index, self.dim_x
        )
    }
}

/// All registered varieties, in a fixed order.
pub fn registry() -> Vec<VarietyDescriptor> {
    let mut providers: Vec<Provider> = (1..=10).map(Provider::Projective).collect();
    providers.extend([(2, 4), (2, 5), (2, 6), (3, 6)].map(|(k, n)| Provider::Grassmannian(k, n)));
    providers.extend((2..=5).map(Provider::Isotropic));
    providers.extend((1..=8).map(|r| Provider::Jacobi(DynkinType::A(r))));
    providers.extend((4..=6).map(|r| Provider::Jacobi(DynkinType::D(r))));
    providers.extend([DynkinType::E6, DynkinType::E7, DynkinType::E8].map(Provider::Jacobi));
    providers.into_iter().map(VarietyDescriptor::new).collect()
}

fn normalize(id: &str) -> String {
    id.chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_uppercase()
}

pub fn lookup(id: &str) -> Option<VarietyDescriptor> {
    let key = normalize(id);
    registry().into_iter().find(|d| normalize(&d.id) == key)
}

pub fn listing() -> String {
    registry().iter().map(|d| format!("  {d}\n")).collect()
}
