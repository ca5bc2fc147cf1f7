//! Irreducible characters of the symmetric group `S_m`.
//!
//! Values are computed by the Murnaghan-Nakayama rule on beta-sets, so every
//! entry is an exact integer. A table fixes two orderings:
//!
//! * columns: conjugacy classes by cycle type, `(m)` first down to `(1^m)`;
//! * rows: `χ_1` is the trivial character, `χ_2` the sign character, and the
//!   remaining characters come in increasing degree, ties broken by
//!   decreasing value on the transposition class, then by the position of
//!   the shape in the column order.
//!
//! The row order matches the numbering used for the immanant family
//! `Imm^{m,k}`: `k = 1` gives the permanent, `k = 2` the determinant.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::perm::{partitions, CycleType, Permutation};

/// Largest `m` for which [`character_table`] is built.
pub const MAX_TABLE_DEGREE: usize = 8;

/// The full character table of `S_m` with both orderings fixed.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    m: usize,
    classes: Vec<CycleType>,
    class_sizes: Vec<u64>,
    shapes: Vec<CycleType>,
    values: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Number of irreducible characters, equal to the number of classes.
    pub fn num_characters(&self) -> usize {
        self.shapes.len()
    }

    /// Conjugacy classes in column order.
    pub fn classes(&self) -> &[CycleType] {
        &self.classes
    }

    pub fn class_sizes(&self) -> &[u64] {
        &self.class_sizes
    }

    /// Shape of `χ_k` (`k` is 1-based).
    pub fn shape(&self, k: usize) -> Result<&CycleType> {
        self.check_k(k)?;
        Ok(&self.shapes[k - 1])
    }

    /// `χ_k` evaluated on the class in column `c` (0-based).
    pub fn value(&self, k: usize, c: usize) -> Result<i64> {
        self.check_k(k)?;
        if c >= self.classes.len() {
            return Err(Error::CharacterIndex { k: c + 1, max: self.classes.len() });
        }
        Ok(self.values[k - 1][c])
    }

    /// Row `k` in column order.
    pub fn row(&self, k: usize) -> Result<&[i64]> {
        self.check_k(k)?;
        Ok(&self.values[k - 1])
    }

    /// Column index of a cycle type.
    pub fn class_index(&self, t: &CycleType) -> Option<usize> {
        self.classes.iter().position(|c| c == t)
    }

    /// `χ_k` on the class of cycle type `t`.
    pub fn value_on(&self, k: usize, t: &CycleType) -> Result<i64> {
        let c = self
            .class_index(t)
            .ok_or_else(|| Error::PartitionSizeMismatch(t.parts().to_vec(), vec![self.m]))?;
        self.value(k, c)
    }

    /// `χ_k(p)`, a class function of the permutation.
    pub fn value_of(&self, k: usize, p: &Permutation) -> Result<i64> {
        if p.degree() != self.m {
            return Err(Error::DegreeMismatch(p.degree(), self.m));
        }
        self.value_on(k, &p.cycle_type())
    }

    /// Degree `d_k = χ_k(identity)`.
    pub fn degree(&self, k: usize) -> Result<i64> {
        // The identity class (1^m) sits in the last column.
        self.value(k, self.classes.len() - 1)
    }

    /// `Σ_c |C_c| χ_k(c) χ_l(c)`; equals `m!` when `k = l` and `0` otherwise.
    pub fn row_inner(&self, k: usize, l: usize) -> Result<i64> {
        self.check_k(k)?;
        self.check_k(l)?;
        Ok(self
            .classes
            .iter()
            .enumerate()
            .map(|(c, _)| self.class_sizes[c] as i64 * self.values[k - 1][c] * self.values[l - 1][c])
            .sum())
    }

    /// `Σ_k χ_k(c) χ_k(d)`; equals the centralizer order of class `c` when
    /// `c = d` and `0` otherwise.
    pub fn column_inner(&self, c: usize, d: usize) -> Result<i64> {
        if c >= self.classes.len() || d >= self.classes.len() {
            return Err(Error::CharacterIndex {
                k: c.max(d) + 1,
                max: self.classes.len(),
            });
        }
        Ok(self.values.iter().map(|row| row[c] * row[d]).sum())
    }

    /// True iff `Σ_c |C_c| χ_k(c) χ_l(c) = m! δ_{kl}` for every pair.
    pub fn row_orthogonality_check(&self) -> bool {
        let order = crate::perm::factorial(self.m) as i64;
        (1..=self.num_characters()).all(|k| {
            (1..=self.num_characters()).all(|l| {
                let expected = if k == l { order } else { 0 };
                self.row_inner(k, l).unwrap() == expected
            })
        })
    }

    /// True iff `Σ_k χ_k(c) χ_k(d) = z_c δ_{cd}` for every pair of classes,
    /// with `z_c` the centralizer order. Independent cross-check of the rows.
    pub fn column_orthogonality_check(&self) -> bool {
        (0..self.classes.len()).all(|c| {
            (0..self.classes.len()).all(|d| {
                let expected = if c == d {
                    self.classes[c].centralizer_order() as i64
                } else {
                    0
                };
                self.column_inner(c, d).unwrap() == expected
            })
        })
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k < 1 || k > self.shapes.len() {
            return Err(Error::CharacterIndex { k, max: self.shapes.len() });
        }
        Ok(())
    }
}

/// Builds the character table of `S_m` for `1 <= m <= 8`.
pub fn character_table(m: usize) -> Result<CharacterTable> {
    if !(1..=MAX_TABLE_DEGREE).contains(&m) {
        return Err(Error::DegreeOutOfRange { degree: m, max: MAX_TABLE_DEGREE });
    }
    let classes = partitions(m);
    let class_sizes: Vec<u64> = classes.iter().map(|t| t.class_size()).collect();

    let mut calc = MnCalc::default();
    let mut rows: Vec<(CycleType, Vec<i64>)> = Vec::new();
    for shape in partitions(m) {
        let values: Vec<i64> = classes
            .iter()
            .map(|class| calc.value(shape.parts(), class.parts()))
            .collect();
        rows.push((shape, values));
    }

    let identity_col = classes.len() - 1;
    let transposition_col = classes
        .iter()
        .position(|t| t.parts().first() == Some(&2) && t.parts().iter().skip(1).all(|&p| p == 1));

    // Trivial first, sign second, then increasing degree with the value on
    // the transposition class (descending) and the shape position as
    // deterministic tie-breaks.
    let trivial = CycleType::new(vec![m]).unwrap();
    let sign = CycleType::new(vec![1; m]).unwrap();
    let mut rest: Vec<(usize, CycleType, Vec<i64>)> = rows
        .into_iter()
        .enumerate()
        .map(|(pos, (shape, values))| (pos, shape, values))
        .collect();
    let mut ordered: Vec<(CycleType, Vec<i64>)> = Vec::new();
    for special in [&trivial, &sign] {
        if let Some(pos) = rest.iter().position(|(_, shape, _)| shape == special) {
            let (_, shape, values) = rest.remove(pos);
            ordered.push((shape, values));
        }
    }
    rest.sort_by_key(|(pos, _, values)| {
        let tie = transposition_col.map_or(0, |c| -values[c]);
        (values[identity_col], tie, *pos)
    });
    ordered.extend(rest.into_iter().map(|(_, shape, values)| (shape, values)));

    let (shapes, values): (Vec<_>, Vec<_>) = ordered.into_iter().unzip();
    Ok(CharacterTable { m, classes, class_sizes, shapes, values })
}

/// Value of the character of the given shape on the given class, both
/// partitions of the same `m`.
pub fn character_value(shape: &CycleType, class: &CycleType) -> Result<i64> {
    if shape.sum() != class.sum() {
        return Err(Error::PartitionSizeMismatch(
            shape.parts().to_vec(),
            class.parts().to_vec(),
        ));
    }
    Ok(MnCalc::default().value(shape.parts(), class.parts()))
}

/// `Σ_{g ∈ S_m} χ_k(h ∘ g⁻¹) χ_l(g)` by full group enumeration.
///
/// Character orthogonality collapses this to `δ_{kl} (m!/d_k) χ_k(h)`, which
/// is the identity behind the orthogonality constant of immanant functions.
pub fn character_convolution(
    table: &CharacterTable,
    k: usize,
    l: usize,
    h: &Permutation,
) -> Result<i64> {
    if h.degree() != table.m() {
        return Err(Error::DegreeMismatch(h.degree(), table.m()));
    }
    let group = crate::perm::enumerate_group(table.m())?;
    let mut sum = 0i64;
    for g in &group {
        sum += table.value_of(k, &h.compose(&g.inverse())?)? * table.value_of(l, g)?;
    }
    Ok(sum)
}

/// True iff the convolution sum equals `δ_{kl} (m!/d_k) χ_k(h)` exactly.
pub fn convolution_check(table: &CharacterTable, k: usize, l: usize, h: &Permutation) -> Result<bool> {
    let lhs = character_convolution(table, k, l, h)?;
    let rhs = if k == l {
        crate::perm::factorial(table.m()) as i64 / table.degree(k)? * table.value_of(k, h)?
    } else {
        0
    };
    Ok(lhs == rhs)
}

/// Hand-checked tables for small degrees, frozen as regression anchors.
/// Rows follow the `χ_k` order, columns the class order of
/// [`character_table`]. Returns `None` for other degrees.
pub fn reference_values(m: usize) -> Option<Vec<Vec<i64>>> {
    match m {
        // Columns (2), (1,1).
        2 => Some(vec![vec![1, 1], vec![-1, 1]]),
        // Columns (3), (2,1), (1,1,1).
        3 => Some(vec![vec![1, 1, 1], vec![1, -1, 1], vec![-1, 0, 2]]),
        // Columns (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
        4 => Some(vec![
            vec![1, 1, 1, 1, 1],
            vec![-1, 1, 1, -1, 1],
            vec![0, -1, 2, 0, 2],
            vec![-1, 0, -1, 1, 3],
            vec![1, 0, -1, -1, 3],
        ]),
        _ => None,
    }
}

/// Murnaghan-Nakayama evaluation, memoized over (shape, remaining class).
///
/// The shape is carried as a beta-set `β_i = λ_i + (t - i)`; removing a rim
/// hook of size `r` replaces some `β_i` by `β_i - r` not already present,
/// with sign `(-1)^h` for `h` the number of entries strictly between.
#[derive(Default)]
struct MnCalc {
    memo: HashMap<(Vec<usize>, Vec<usize>), i64>,
}

impl MnCalc {
    fn value(&mut self, shape: &[usize], class: &[usize]) -> i64 {
        if shape.is_empty() {
            return 1;
        }
        let key = (shape.to_vec(), class.to_vec());
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let r = class[0] as i64;
        let rest = &class[1..];
        let t = shape.len();
        let beta: Vec<i64> = shape
            .iter()
            .enumerate()
            .map(|(i, &p)| p as i64 + (t - 1 - i) as i64)
            .collect();
        let mut total = 0i64;
        for (i, &b) in beta.iter().enumerate() {
            let target = b - r;
            if target < 0 || beta.contains(&target) {
                continue;
            }
            let legs = beta.iter().filter(|&&x| target < x && x < b).count();
            let sign = if legs % 2 == 0 { 1 } else { -1 };
            let mut next = beta.clone();
            next[i] = target;
            next.sort_unstable_by(|a, b| b.cmp(a));
            let mut next_shape: Vec<usize> = next
                .iter()
                .enumerate()
                .map(|(j, &bj)| (bj - (t - 1 - j) as i64) as usize)
                .collect();
            while next_shape.last() == Some(&0) {
                next_shape.pop();
            }
            total += sign * self.value(&next_shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}
