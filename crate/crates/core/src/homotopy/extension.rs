//! Short exact sequences of equivariant modules with split certificates.

use crate::equivariant::{is_morphism, EquivariantModule};
use crate::error::ModuleError;
use crate::exactla::{solve_intertwiner, MapConstraint, MapShape, Matrix};

/// A verified short exact sequence `0 → L →i M →p N → 0` in `C^H_{A,H}`.
/// A-splitness and equivariant splitness are decided by affine solves; the
/// witnesses (a retraction of `i` of the respective kind) are returned.
pub struct ExtensionData {
    pub sub: EquivariantModule,
    pub middle: EquivariantModule,
    pub quotient: EquivariantModule,
    pub i: Matrix,
    pub p: Matrix,
}

impl ExtensionData {
    /// Verify exactness (`p∘i = 0`, `i` injective, `p` surjective,
    /// matching dimensions) and that both maps are morphisms of `C^H`.
    pub fn new(
        sub: EquivariantModule,
        middle: EquivariantModule,
        quotient: EquivariantModule,
        i: Matrix,
        p: Matrix,
    ) -> Result<ExtensionData, ModuleError> {
        if !is_morphism(&i, &sub, &middle) || !is_morphism(&p, &middle, &quotient) {
            return Err(ModuleError::NotAMorphism("a morphism of C^H"));
        }
        let exact = p.matmul(&i).is_zero()
            && i.rank() == sub.dim()
            && p.rank() == quotient.dim()
            && middle.dim() == sub.dim() + quotient.dim();
        if !exact {
            return Err(ModuleError::Shape("the row is not short exact".into()));
        }
        Ok(ExtensionData {
            sub,
            middle,
            quotient,
            i,
            p,
        })
    }

    /// An A-linear (not necessarily equivariant) retraction of `i`, if any:
    /// the witness that the extension is A-split.
    pub fn a_split_retraction(&self) -> Option<Matrix> {
        self.retraction(false)
    }

    /// An equivariant retraction of `i`, if any: the witness that the
    /// extension splits in `C^H`.
    pub fn equivariant_retraction(&self) -> Option<Matrix> {
        self.retraction(true)
    }

    fn retraction(&self, equivariant: bool) -> Option<Matrix> {
        let cat = self.middle.cat();
        let hopf = self.middle.hopf();
        let field = cat.field();
        let id = Matrix::identity(field, self.sub.dim());
        let shape = MapShape::masked(
            field,
            self.sub.dim(),
            self.middle.dim(),
            self.middle.amod().graded_mask_into(self.sub.amod()),
        );
        let mut constraints: Vec<MapConstraint> = Vec::new();
        for &g in cat.generators() {
            constraints.push(MapConstraint::Intertwine {
                p: self.sub.a_action(g),
                q: self.middle.a_action(g),
            });
        }
        if equivariant {
            for &g in hopf.generators() {
                constraints.push(MapConstraint::Intertwine {
                    p: self.sub.h_action(g),
                    q: self.middle.h_action(g),
                });
            }
        }
        constraints.push(MapConstraint::ComposeRight {
            f: &self.i,
            rhs: &id,
        });
        solve_intertwiner(&shape, &constraints).map(|s| s.particular)
    }
}

/// The split extension `0 → L → L⊕N → N → 0`.
pub fn direct_sum_extension(
    l: &EquivariantModule,
    n: &EquivariantModule,
) -> ExtensionData {
    let m = l.direct_sum(n);
    let e_l = l.amod().sum_embedding(m.grading(), true);
    let e_n = n.amod().sum_embedding(m.grading(), false);
    ExtensionData::new(
        l.clone(),
        m.clone(),
        n.clone(),
        e_l,
        e_n.transpose(),
    )
    .expect("direct sums are exact")
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::equivariant::{trivial_category, EquivariantModule};
    use crate::hmodules::{jordan_module, HModule};
    use crate::hopfcore::divided_power;

    #[test]
    fn split_extension_has_both_retractions() {
        let h = Arc::new(divided_power(3).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let j2 = EquivariantModule::from_hmodule(&jordan_module(&h, 2).unwrap(), &cat);
        let ext = direct_sum_extension(&k, &j2);
        let t = ext.a_split_retraction().expect("A-split");
        assert!(t.matmul(&ext.i).is_identity());
        let t = ext.equivariant_retraction().expect("split");
        assert!(t.matmul(&ext.i).is_identity());
    }

    #[test]
    fn jordan_extension_is_a_split_but_not_split() {
        // 0 → J1 → J2 → J1 → 0 over F_2[d]/(d²), A = k: every k-split row is
        // A-split, but the middle J2 is indecomposable so there is no
        // equivariant retraction.
        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let field = h.field();
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let j2 = EquivariantModule::from_hmodule(&jordan_module(&h, 2).unwrap(), &cat);
        // d·e2 = e1: the submodule is span(e1).
        let i = Matrix::from_i64(field, 2, 1, &[1, 0]);
        let p = Matrix::from_i64(field, 1, 2, &[0, 1]);
        let ext = ExtensionData::new(k.clone(), j2, k, i, p).unwrap();
        assert!(ext.a_split_retraction().is_some());
        assert!(ext.equivariant_retraction().is_none());
    }

    #[test]
    fn non_exact_rows_are_rejected() {
        let h = Arc::new(divided_power(2).unwrap());
        let cat = Arc::new(trivial_category(&h));
        let k = EquivariantModule::from_hmodule(&HModule::trivial(&h), &cat);
        let z = Matrix::zeros(h.field(), 1, 1);
        assert!(ExtensionData::new(k.clone(), k.clone(), k.clone(), z.clone(), z).is_err());
    }
}
