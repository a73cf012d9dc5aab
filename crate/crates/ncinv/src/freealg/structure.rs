//! Finite-dimensional algebras given by structure constants, and exact
//! identity testing via generic elements.

use num_traits::Zero;

use super::comm::CommPoly;
use super::poly::NcPoly;
use super::FreeAlgError;
use crate::rat::{rat_int, Rat};

/// An associative algebra of finite dimension over the rationals, presented
/// by structure constants: `e_i * e_j = sum_k c[i][j][k] e_k`.
///
/// Associativity is verified exhaustively at construction.
#[derive(Clone, Debug)]
pub struct StructureAlgebra {
    dim: usize,
    /// Flattened `dim^3` table, indexed `(i * dim + j) * dim + k`.
    constants: Vec<Rat>,
    /// Coordinates of the unit element, when the algebra is unital.
    unit: Option<Vec<Rat>>,
}

impl StructureAlgebra {
    /// Build and validate an algebra. `constants` is the flattened
    /// `dim^3` table; `unit` the unit coordinates if the algebra has one.
    pub fn new(
        dim: usize,
        constants: Vec<Rat>,
        unit: Option<Vec<Rat>>,
    ) -> Result<Self, FreeAlgError> {
        if dim == 0 || constants.len() != dim * dim * dim {
            return Err(FreeAlgError::BadStructureConstants(format!(
                "expected {} structure constants for dimension {dim}, got {}",
                dim * dim * dim,
                constants.len()
            )));
        }
        let alg = StructureAlgebra {
            dim,
            constants,
            unit,
        };
        alg.check_associativity()?;
        alg.check_unit()?;
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn has_unit(&self) -> bool {
        self.unit.is_some()
    }

    pub fn unit_coords(&self) -> Option<&[Rat]> {
        self.unit.as_deref()
    }

    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.constants[(i * self.dim + j) * self.dim + k]
    }

    /// Product of two coordinate vectors with rational entries.
    pub fn mul_coords(&self, u: &[Rat], v: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui.clone() * vj.clone();
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out[k] += uv.clone() * c.clone();
                    }
                }
            }
        }
        out
    }

    /// Product of two coordinate vectors with [`CommPoly`] entries.
    pub fn mul_generic(&self, u: &[CommPoly], v: &[CommPoly]) -> Vec<CommPoly> {
        let mut out = vec![CommPoly::zero(); self.dim];
        for (i, ui) in u.iter().enumerate() {
            if ui.is_zero() {
                continue;
            }
            for (j, vj) in v.iter().enumerate() {
                if vj.is_zero() {
                    continue;
                }
                let uv = ui.mul(vj);
                for k in 0..self.dim {
                    let c = self.constant(i, j, k);
                    if !c.is_zero() {
                        out[k].add_scaled(&uv, c);
                    }
                }
            }
        }
        out
    }

    fn check_associativity(&self) -> Result<(), FreeAlgError> {
        // (e_i e_j) e_k = e_i (e_j e_k), expanded through the table
        for i in 0..self.dim {
            for j in 0..self.dim {
                for k in 0..self.dim {
                    for m in 0..self.dim {
                        let mut lhs = Rat::zero();
                        let mut rhs = Rat::zero();
                        for l in 0..self.dim {
                            lhs += self.constant(i, j, l).clone() * self.constant(l, k, m).clone();
                            rhs += self.constant(j, k, l).clone() * self.constant(i, l, m).clone();
                        }
                        if lhs != rhs {
                            return Err(FreeAlgError::BadStructureConstants(format!(
                                "associativity fails at (e{i} e{j}) e{k}, coordinate {m}"
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn check_unit(&self) -> Result<(), FreeAlgError> {
        if let Some(u) = &self.unit {
            if u.len() != self.dim {
                return Err(FreeAlgError::BadStructureConstants(
                    "unit coordinate length mismatch".into(),
                ));
            }
            for i in 0..self.dim {
                let mut basis = vec![Rat::zero(); self.dim];
                basis[i] = rat_int(1);
                if self.mul_coords(u, &basis) != basis || self.mul_coords(&basis, u) != basis {
                    return Err(FreeAlgError::BadStructureConstants(
                        "claimed unit is not a two-sided unit".into(),
                    ));
                }
            }
        }
        Ok(())
    }

    /// The full `n x n` matrix algebra, basis `e_{ab}` ordered row-major.
    pub fn full_matrix(n: usize) -> Self {
        let dim = n * n;
        let mut constants = vec![Rat::zero(); dim * dim * dim];
        let idx = |a: usize, b: usize| a * n + b;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for e in 0..n {
                        // e_{ab} e_{ce} = delta_{bc} e_{ae}
                        if b == c {
                            let i = idx(a, b);
                            let j = idx(c, e);
                            let k = idx(a, e);
                            constants[(i * dim + j) * dim + k] = rat_int(1);
                        }
                    }
                }
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        for a in 0..n {
            unit[idx(a, a)] = rat_int(1);
        }
        Self::new(dim, constants, Some(unit)).expect("matrix algebra is associative")
    }

    /// Upper triangular 2x2 matrices: basis `(e11, e12, e22)`.
    pub fn upper_triangular_2() -> Self {
        let table = [
            // e11*e11 = e11, e11*e12 = e12, others with e11 on the left
            ((0, 0), vec![(0, 1)]),
            ((0, 1), vec![(1, 1)]),
            ((0, 2), vec![]),
            ((1, 0), vec![]),
            ((1, 1), vec![]),
            ((1, 2), vec![(1, 1)]),
            ((2, 0), vec![]),
            ((2, 1), vec![]),
            ((2, 2), vec![(2, 1)]),
        ];
        let dim = 3;
        let mut constants = vec![Rat::zero(); dim * dim * dim];
        for ((i, j), entries) in table {
            for (k, v) in entries {
                constants[(i * dim + j) * dim + k] = rat_int(v);
            }
        }
        let unit = vec![rat_int(1), rat_int(0), rat_int(1)];
        Self::new(dim, constants, Some(unit)).expect("U2 is associative")
    }

    /// The one-dimensional unital algebra (the base field itself).
    pub fn one_dimensional() -> Self {
        Self::new(1, vec![rat_int(1)], Some(vec![rat_int(1)])).expect("field is associative")
    }

    /// The algebra of 2x2 matrices over `K[t]/(t^k)` whose off-diagonal
    /// entries lie in `t K[t]/(t^k)`. Dimension `4k - 2`.
    ///
    /// Basis order: `e11 t^a` (a = 0..k-1), `e22 t^a` (a = 0..k-1),
    /// `e12 t^b` (b = 1..k-1), `e21 t^b` (b = 1..k-1).
    pub fn build_rk(k: usize) -> Self {
        assert!(k >= 1);
        let dim = 4 * k - 2;
        // basis element = (matrix position, power of t)
        #[derive(Clone, Copy, PartialEq)]
        enum Pos {
            E11,
            E22,
            E12,
            E21,
        }
        let mut basis: Vec<(Pos, usize)> = Vec::with_capacity(dim);
        for a in 0..k {
            basis.push((Pos::E11, a));
        }
        for a in 0..k {
            basis.push((Pos::E22, a));
        }
        for b in 1..k {
            basis.push((Pos::E12, b));
        }
        for b in 1..k {
            basis.push((Pos::E21, b));
        }
        let index_of = |p: Pos, t: usize| -> Option<usize> {
            if t >= k {
                return None; // t^k = 0
            }
            match p {
                Pos::E11 => Some(t),
                Pos::E22 => Some(k + t),
                Pos::E12 => {
                    if t == 0 {
                        None
                    } else {
                        Some(2 * k + (t - 1))
                    }
                }
                Pos::E21 => {
                    if t == 0 {
                        None
                    } else {
                        Some(3 * k - 1 + (t - 1))
                    }
                }
            }
        };
        // e_{ab} t^s * e_{cd} t^r = delta_{bc} e_{ad} t^{s+r}
        let rows = |p: Pos| match p {
            Pos::E11 => (0, 0),
            Pos::E22 => (1, 1),
            Pos::E12 => (0, 1),
            Pos::E21 => (1, 0),
        };
        let pos_of = |a: usize, b: usize| match (a, b) {
            (0, 0) => Pos::E11,
            (1, 1) => Pos::E22,
            (0, 1) => Pos::E12,
            (1, 0) => Pos::E21,
            _ => unreachable!(),
        };
        let mut constants = vec![Rat::zero(); dim * dim * dim];
        for (i, &(p1, t1)) in basis.iter().enumerate() {
            for (j, &(p2, t2)) in basis.iter().enumerate() {
                let (a, b) = rows(p1);
                let (c, d) = rows(p2);
                if b != c {
                    continue;
                }
                if let Some(kidx) = index_of(pos_of(a, d), t1 + t2) {
                    constants[(i * dim + j) * dim + kidx] = rat_int(1);
                }
            }
        }
        let mut unit = vec![Rat::zero(); dim];
        unit[0] = rat_int(1); // e11 t^0
        unit[k] = rat_int(1); // e22 t^0
        Self::new(dim, constants, Some(unit)).expect("R_k is associative")
    }
}

/// Decide whether `f` is a polynomial identity of `alg` by substituting a
/// generic element `sum_b t_{i,b} e_b` (fresh commutative indeterminates)
/// for each variable and checking that every coordinate vanishes.
///
/// Over an infinite field of characteristic 0 this is equivalent to `f`
/// vanishing under all substitutions from the algebra.
pub fn holds_in_algebra(f: &NcPoly, alg: &StructureAlgebra) -> bool {
    if f.is_zero() {
        return true;
    }
    let dim = alg.dim();
    let d = f.max_variable() as usize;
    // coordinates of the generic image of x_i: t_{(i-1)*dim + b}
    let generic: Vec<Vec<CommPoly>> = (0..d)
        .map(|i| {
            (0..dim)
                .map(|b| CommPoly::var((i * dim + b) as u32))
                .collect()
        })
        .collect();
    let mut acc = vec![CommPoly::zero(); dim];
    for (w, c) in f.terms() {
        let coords = match eval_word(alg, &generic, w) {
            Some(v) => v,
            // empty word without a unit: a nonzero constant term can
            // never vanish in a nonunital algebra
            None => return false,
        };
        for (a, v) in acc.iter_mut().zip(coords) {
            a.add_scaled(&v, c);
        }
    }
    acc.iter().all(|c| c.is_zero())
}

fn eval_word(
    alg: &StructureAlgebra,
    generic: &[Vec<CommPoly>],
    w: &crate::freealg::Word,
) -> Option<Vec<CommPoly>> {
    if w.is_one() {
        let unit = alg.unit_coords()?;
        return Some(unit.iter().map(|c| CommPoly::constant(c.clone())).collect());
    }
    let mut iter = w.letters().iter();
    let first = *iter.next().unwrap() as usize - 1;
    let mut coords = generic[first].clone();
    for &l in iter {
        coords = alg.mul_generic(&coords, &generic[l as usize - 1]);
    }
    Some(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rk_dimensions() {
        assert_eq!(StructureAlgebra::build_rk(1).dim(), 2);
        assert_eq!(StructureAlgebra::build_rk(2).dim(), 6);
        // k = 3 exercises the exhaustive associativity self-check at dim 10
        assert_eq!(StructureAlgebra::build_rk(3).dim(), 10);
    }

    #[test]
    fn rk1_is_commutative() {
        // R_1 is the diagonal 2x2 matrices
        let alg = StructureAlgebra::build_rk(1);
        let c = NcPoly::commutator(&[NcPoly::var(1), NcPoly::var(2)]).unwrap();
        assert!(holds_in_algebra(&c, &alg));
    }

    #[test]
    fn one_dimensional_is_commutative() {
        let alg = StructureAlgebra::one_dimensional();
        let c = NcPoly::commutator(&[NcPoly::var(1), NcPoly::var(2)]).unwrap();
        assert!(holds_in_algebra(&c, &alg));
    }

    #[test]
    fn u2_satisfies_product_of_commutators() {
        let alg = StructureAlgebra::upper_triangular_2();
        let c1 = NcPoly::commutator(&[NcPoly::var(1), NcPoly::var(2)]).unwrap();
        let c2 = NcPoly::commutator(&[NcPoly::var(3), NcPoly::var(4)]).unwrap();
        assert!(holds_in_algebra(&c1.mul(&c2), &alg));
        assert!(!holds_in_algebra(&c1, &alg));
    }

    #[test]
    fn m2_identities() {
        let m2 = StructureAlgebra::full_matrix(2);
        assert!(holds_in_algebra(&NcPoly::standard_polynomial(4), &m2));
        let c = NcPoly::commutator(&[NcPoly::var(1), NcPoly::var(2)]).unwrap();
        assert!(!holds_in_algebra(&c, &m2));
        // [x1,x2]^2 is central for M2: [[x1,x2]^2, x3] = 0
        let central = NcPoly::commutator(&[c.mul(&c), NcPoly::var(3)]).unwrap();
        assert!(holds_in_algebra(&central, &m2));
    }

    #[test]
    fn constant_term_without_unit_fails() {
        // strip the unit from the field: 1-dim algebra with e*e = 0
        let nil = StructureAlgebra::new(1, vec![Rat::zero()], None).unwrap();
        assert!(!holds_in_algebra(&NcPoly::one(), &nil));
        // but x1 x2 = 0 holds there
        let p = NcPoly::var(1).mul(&NcPoly::var(2));
        assert!(holds_in_algebra(&p, &nil));
    }
}
