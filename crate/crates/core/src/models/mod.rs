//! Builders for concrete cochain models.

mod bracket;
mod ce;
mod combin;
mod functorial;
mod mesh;
mod poly;
mod product;
pub(crate) mod simplicial;
mod spec;

pub use bracket::{wedge_bracket, CeModel, FormModel, GradedForm, ModelKind, PolyModel, SimplicialModel};
pub use ce::{ce_basis, chevalley_eilenberg, chevalley_eilenberg_unchecked, chevalley_eilenberg_with};
pub use combin::{binomial, subsets};
pub use functorial::{
    coefficient_map, module_map, pullback, pullback_with_dim, simplicial_values_map, CoefficientModel, SimplicialMap,
};
pub use mesh::{bundled_cover, bundled_mesh, bundled_mesh_names, rational_rotation, MeshFile, SimplicialComplex};
pub use poly::{poly_derham, Monomial, PolyDeRham, Stratified};
pub use product::{product_model, product_model_rn, product_model_rn_with};
pub use simplicial::{is_automorphism, simplicial_cochains, simplicial_gvalued, simplicial_scalar};
pub use spec::{load_mesh, ModelSpec};
