//! The spaces V_m of functions on {0,1}^{2m} whose strictly-below and
//! strictly-above subset sums vanish at every point. Each V_m sits inside
//! the nullspace of the squarefree graph of type 1^{2m}, and tensoring
//! maps V_{m1} ⊗ V_{m2} into V_{m1+m2}.

use crate::error::{Error, Result};
use crate::exactla::{self, MatrixSource, NullityMode};
use num_rational::BigRational;
use num_traits::Zero;

/// Stacked constraint matrix: for every point α one row summing f over
/// strict submasks of α and one row over strict supermasks.
struct VmConstraints {
    points: usize,
}

impl MatrixSource for VmConstraints {
    fn nrows(&self) -> usize {
        2 * self.points
    }

    fn ncols(&self) -> usize {
        self.points
    }

    fn entry(&self, i: usize, j: usize) -> i64 {
        let alpha = i / 2;
        let below = i % 2 == 0;
        if alpha == j {
            return 0;
        }
        let is_sub = j & alpha == j;
        let is_super = j | alpha == j;
        i64::from(if below { is_sub } else { is_super })
    }
}

#[derive(Debug, Clone)]
pub struct VmSpace {
    pub m: u32,
    pub dimension: usize,
    /// Exact rational basis vectors, indexed by bitmask over 2m bits.
    pub basis: Vec<Vec<BigRational>>,
}

/// Solves the V_m constraints exactly. The empty product case m = 0 has
/// a single point with two vacuous constraints, so the space is the full
/// one-dimensional function space.
pub fn vm_space(m: u32) -> Result<VmSpace> {
    if 2 * m > 12 {
        return Err(Error::GuardExceeded {
            what: "vm_space",
            requested: u64::from(2 * m),
            limit: 12,
        });
    }
    let points = 1usize << (2 * m);
    let constraints = VmConstraints { points };
    let mode = if points <= 128 {
        NullityMode::RationalExact
    } else {
        NullityMode::Modular {
            seed: 2 * m as u64 + 1,
        }
    };
    let cert = exactla::nullity_of(&constraints, mode)?;
    let basis: Vec<Vec<BigRational>> = cert
        .kernel_basis
        .iter()
        .map(|v| v.iter().cloned().map(BigRational::from).collect())
        .collect();
    for f in &basis {
        check_vm_membership(f, 2 * m as usize)?;
    }
    Ok(VmSpace {
        m,
        dimension: cert.nullity,
        basis,
    })
}

/// Verifies the defining sums of V_m for a candidate function via subset
/// and superset sweeps.
pub fn check_vm_membership(f: &[BigRational], bits: usize) -> Result<()> {
    let points = 1usize << bits;
    if f.len() != points {
        return Err(Error::InvalidInput("function has wrong domain size".into()));
    }
    // down[α] = Σ_{β ⊆ α} f(β), up[α] = Σ_{β ⊇ α} f(β)
    let mut down: Vec<BigRational> = f.to_vec();
    let mut up: Vec<BigRational> = f.to_vec();
    for b in 0..bits {
        for alpha in 0..points {
            if alpha >> b & 1 == 1 {
                let partner = down[alpha ^ (1 << b)].clone();
                down[alpha] += partner;
            } else {
                let partner = up[alpha | (1 << b)].clone();
                up[alpha] += partner;
            }
        }
    }
    for alpha in 0..points {
        if &down[alpha] - &f[alpha] != BigRational::zero()
            || &up[alpha] - &f[alpha] != BigRational::zero()
        {
            return Err(Error::VerificationFailed(format!(
                "V_m constraint fails at point {alpha:#b}"
            )));
        }
    }
    Ok(())
}

/// Tensor product of functions on {0,1}^{2m1} and {0,1}^{2m2}, laid out
/// with the first factor in the low bits.
pub fn tensor(f1: &[BigRational], bits1: usize, f2: &[BigRational]) -> Vec<BigRational> {
    let mut out = Vec::with_capacity(f1.len() * f2.len());
    for x2 in f2 {
        for x1 in f1 {
            out.push(x1 * x2);
        }
    }
    debug_assert_eq!(out.len(), 1 << bits1 << (f2.len().trailing_zeros()));
    out
}

#[derive(Debug, Clone)]
pub struct TensorInclusionReport {
    pub m1: u32,
    pub m2: u32,
    pub pairs_checked: usize,
}

/// Checks V_{m1} ⊗ V_{m2} ⊆ V_{m1+m2} on full bases, exactly.
pub fn vm_tensor_inclusion(m1: u32, m2: u32) -> Result<TensorInclusionReport> {
    let m = m1 + m2;
    if 2 * m > 12 {
        return Err(Error::GuardExceeded {
            what: "vm_tensor_inclusion",
            requested: u64::from(2 * m),
            limit: 12,
        });
    }
    let v1 = vm_space(m1)?;
    let v2 = vm_space(m2)?;
    let mut pairs = 0;
    for f1 in &v1.basis {
        for f2 in &v2.basis {
            let f = tensor(f1, 2 * m1 as usize, f2);
            check_vm_membership(&f, 2 * m as usize)?;
            pairs += 1;
        }
    }
    Ok(TensorInclusionReport {
        m1,
        m2,
        pairs_checked: pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::h_vector;

    #[test]
    fn v0_is_one_dimensional() {
        let v0 = vm_space(0).unwrap();
        assert_eq!(v0.dimension, 1);
    }

    #[test]
    fn v1_is_spanned_by_h() {
        let v1 = vm_space(1).unwrap();
        assert_eq!(v1.dimension, 1);
        // proportional to h = (0, −1, 1, 0)
        let b = &v1.basis[0];
        let h = h_vector();
        let ratio_pos = h
            .values()
            .iter()
            .zip(b)
            .find(|(hv, _)| !hv.is_zero())
            .map(|(hv, bv)| bv / hv)
            .unwrap();
        for (hv, bv) in h.values().iter().zip(b) {
            assert_eq!(bv, &(hv * &ratio_pos));
        }
    }

    #[test]
    fn v2_contains_h_tensor_h() {
        let v2 = vm_space(2).unwrap();
        assert!(v2.dimension >= 1);
        let h: Vec<BigRational> = h_vector().values().to_vec();
        let hh = tensor(&h, 2, &h);
        check_vm_membership(&hh, 4).unwrap();
        // dim(V_1 ⊗ V_1) = 1 ≤ dim V_2
        assert!(v2.dimension >= 1);
    }

    #[test]
    fn vm_dimension_bounded_by_nullity() {
        use crate::arith::FactorizationType;
        use crate::divgraph::DivGraph;
        use crate::exactla::AdjShift;
        for m in 0..=2u32 {
            let vm = vm_space(m).unwrap();
            let t = FactorizationType::squarefree(2 * m as usize);
            let g = DivGraph::build(&t).unwrap();
            let cert = exactla::nullity_of(
                &AdjShift {
                    adj: g.adj(),
                    lambda: 0,
                },
                NullityMode::RationalExact,
            )
            .unwrap();
            assert!(vm.dimension <= cert.nullity, "m = {m}");
        }
    }

    #[test]
    fn tensor_inclusions() {
        assert_eq!(vm_tensor_inclusion(1, 1).unwrap().pairs_checked, 1);
        vm_tensor_inclusion(0, 1).unwrap();
        vm_tensor_inclusion(1, 2).unwrap();
        assert!(vm_tensor_inclusion(3, 4).is_err());
    }
}
