//! Finite abelian groups as explicit multiplication tables.
//!
//! Groups are built as direct products of cyclic factors Z_{m_1} x ... x
//! Z_{m_k}. Elements are dense indices into a mixed-radix encoding of
//! exponent vectors, and the full Cayley table is materialized up front, so
//! everything downstream (smash products, Hopf structure constants,
//! verification loops) is plain table lookup.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::{capacity_err, domain_err, Result};

/// Largest group order the constructors accept. Everything downstream builds
/// tables quadratic (sometimes cubic) in this, so it stays small.
pub const GROUP_ORDER_CAP: usize = 1024;

/// Work bound for the brute-force automorphism search.
const AUTOMORPHISM_SEARCH_CAP: u64 = 1 << 22;

/// A finite abelian group, presented as Z_{m_1} x ... x Z_{m_k} with a
/// precomputed Cayley table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    orders: Vec<u32>,
    order: usize,
    mul_table: Vec<usize>,
    inv_table: Vec<usize>,
}

impl FiniteGroup {
    /// Direct product of cyclic groups of the given orders. An empty factor
    /// list gives the trivial group.
    pub fn product_of_cyclics(orders: &[u32]) -> Result<Self> {
        if orders.iter().any(|&m| m == 0) {
            return domain_err("cyclic factor orders must be positive");
        }
        let mut order: usize = 1;
        for &m in orders {
            order = order
                .checked_mul(m as usize)
                .filter(|&o| o <= GROUP_ORDER_CAP)
                .ok_or_else(|| {
                    crate::Error::Capacity(format!(
                        "group order exceeds the cap {GROUP_ORDER_CAP}"
                    ))
                })?;
        }
        let orders = orders.to_vec();
        let mut g = FiniteGroup {
            orders,
            order,
            mul_table: vec![0; order * order],
            inv_table: vec![0; order],
        };
        for a in 0..order {
            let ea = g.exponents(a);
            for b in 0..order {
                let eb = g.exponents(b);
                let sum: Vec<i64> = ea
                    .iter()
                    .zip(&eb)
                    .map(|(&x, &y)| x as i64 + y as i64)
                    .collect();
                g.mul_table[a * order + b] = g.from_exponents(&sum);
            }
            let neg: Vec<i64> = ea.iter().map(|&x| -(x as i64)).collect();
            g.inv_table[a] = g.from_exponents(&neg);
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Orders of the cyclic factors, as given at construction.
    pub fn factor_orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul_table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv_table[a]
    }

    pub fn pow(&self, a: usize, k: i64) -> usize {
        let ea = self.exponents(a);
        let scaled: Vec<i64> = ea.iter().map(|&x| x as i64 * k).collect();
        self.from_exponents(&scaled)
    }

    pub fn elements(&self) -> impl Iterator<Item = usize> {
        0..self.order
    }

    /// Mixed-radix decode of an element index into exponents per factor.
    pub fn exponents(&self, mut a: usize) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.orders.len());
        for &m in &self.orders {
            out.push((a % m as usize) as u32);
            a /= m as usize;
        }
        out
    }

    /// Mixed-radix encode; exponents reduce mod the factor orders, so any
    /// integers are accepted.
    pub fn from_exponents(&self, exps: &[i64]) -> usize {
        assert_eq!(exps.len(), self.orders.len(), "exponent arity mismatch");
        let mut idx = 0usize;
        let mut stride = 1usize;
        for (&x, &m) in exps.iter().zip(&self.orders) {
            idx += (x.rem_euclid(m as i64) as usize) * stride;
            stride *= m as usize;
        }
        idx
    }

    /// Multiplicative order of an element.
    pub fn element_order(&self, a: usize) -> u32 {
        let mut ord: u64 = 1;
        for (&x, &m) in self.exponents(a).iter().zip(&self.orders) {
            let m = m as u64;
            let fac = m / m.gcd(&(x as u64));
            ord = ord.lcm(&fac);
        }
        ord as u32
    }

    /// Exponent of the group: lcm of all element orders.
    pub fn exponent(&self) -> u32 {
        let mut e: u64 = 1;
        for &m in &self.orders {
            e = e.lcm(&(m as u64));
        }
        e as u32
    }

    /// True when a² = 1 and a ≠ 1.
    pub fn is_involution(&self, a: usize) -> bool {
        a != self.identity() && self.mul(a, a) == self.identity()
    }

    /// Whether the element commutes with everything. Trivially true for
    /// these direct products, but validation paths spell it out.
    pub fn is_central(&self, a: usize) -> bool {
        self.elements().all(|x| self.mul(a, x) == self.mul(x, a))
    }

    /// Full associativity / identity / inverse audit of the stored table.
    /// Cubic in the order; meant for tests and validation, not hot paths.
    pub fn verify_axioms(&self) -> Result<()> {
        let e = self.identity();
        for a in self.elements() {
            if self.mul(a, e) != a || self.mul(e, a) != a {
                return domain_err(format!("identity fails at element {a}"));
            }
            if self.mul(a, self.inv(a)) != e {
                return domain_err(format!("inverse fails at element {a}"));
            }
        }
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                        return domain_err(format!("associativity fails at ({a}, {b}, {c})"));
                    }
                }
            }
        }
        Ok(())
    }

    /// Human-readable element name: factors are lettered a, b, c, ...
    pub fn element_name(&self, a: usize) -> String {
        let exps = self.exponents(a);
        let mut parts = Vec::new();
        for (j, &x) in exps.iter().enumerate() {
            if x == 0 {
                continue;
            }
            let letter = (b'a' + (j as u8 % 26)) as char;
            if x == 1 {
                parts.push(format!("{letter}"));
            } else {
                parts.push(format!("{letter}^{x}"));
            }
        }
        if parts.is_empty() {
            String::from("1")
        } else {
            parts.join("*")
        }
    }

    /// All automorphisms fixing the given element, each returned as the
    /// permutation `image[x]`. Brute force over generator images; errors out
    /// when the search space exceeds an internal work cap.
    pub fn automorphisms_fixing(&self, fixed: usize) -> Result<Vec<Vec<usize>>> {
        let k = self.orders.len();
        let mut space: u64 = 1;
        for _ in 0..k {
            space = space.saturating_mul(self.order as u64);
            if space > AUTOMORPHISM_SEARCH_CAP {
                return capacity_err(format!(
                    "automorphism search space exceeds {AUTOMORPHISM_SEARCH_CAP}"
                ));
            }
        }
        // Generator j is the element with exponent vector e_j. A candidate
        // tuple of images extends to a homomorphism iff each image order
        // divides the factor order; bijectivity is then checked directly.
        let mut found = Vec::new();
        let mut images = vec![0usize; k];
        self.search_automorphisms(0, &mut images, fixed, &mut found);
        Ok(found)
    }

    fn search_automorphisms(
        &self,
        j: usize,
        images: &mut Vec<usize>,
        fixed: usize,
        found: &mut Vec<Vec<usize>>,
    ) {
        if j == self.orders.len() {
            if let Some(perm) = self.build_endomorphism(images) {
                let mut seen = vec![false; self.order];
                let mut bijective = true;
                for &y in &perm {
                    if seen[y] {
                        bijective = false;
                        break;
                    }
                    seen[y] = true;
                }
                if bijective && perm[fixed] == fixed {
                    found.push(perm);
                }
            }
            return;
        }
        for cand in self.elements() {
            if self.orders[j] % self.element_order(cand) == 0 {
                images[j] = cand;
                self.search_automorphisms(j + 1, images, fixed, found);
            }
        }
    }

    /// The endomorphism sending generator j to `images[j]`, or `None` if the
    /// images fail the factor-order relations (checked by the caller's
    /// filter, so this always succeeds in practice).
    fn build_endomorphism(&self, images: &[usize]) -> Option<Vec<usize>> {
        let mut perm = Vec::with_capacity(self.order);
        for x in self.elements() {
            let exps = self.exponents(x);
            let mut y = self.identity();
            for (j, &e) in exps.iter().enumerate() {
                y = self.mul(y, self.pow(images[j], e as i64));
            }
            perm.push(y);
        }
        Some(perm)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cyclic_basics() {
        let g = FiniteGroup::product_of_cyclics(&[6]).unwrap();
        assert_eq!(g.order(), 6);
        let a = g.from_exponents(&[1]);
        assert_eq!(g.mul(a, g.pow(a, 5)), g.identity());
        assert_eq!(g.inv(a), g.pow(a, 5));
        assert_eq!(g.element_order(g.pow(a, 2)), 3);
        assert_eq!(g.exponent(), 6);
        g.verify_axioms().unwrap();
    }

    #[test]
    fn product_encoding_round_trips() {
        let g = FiniteGroup::product_of_cyclics(&[4, 2]).unwrap();
        assert_eq!(g.order(), 8);
        for x in g.elements() {
            let exps: Vec<i64> = g.exponents(x).iter().map(|&e| e as i64).collect();
            assert_eq!(g.from_exponents(&exps), x);
        }
        // Negative exponents reduce into range.
        assert_eq!(g.from_exponents(&[-1, -1]), g.from_exponents(&[3, 1]));
        assert_eq!(g.exponent(), 4);
        g.verify_axioms().unwrap();
    }

    #[test]
    fn involutions_and_centrality() {
        let g = FiniteGroup::product_of_cyclics(&[8]).unwrap();
        let u = g.from_exponents(&[4]);
        assert!(g.is_involution(u));
        assert!(!g.is_involution(g.identity()));
        assert!(!g.is_involution(g.from_exponents(&[2])));
        assert!(g.is_central(u));
    }

    #[test]
    fn element_names() {
        let g = FiniteGroup::product_of_cyclics(&[4, 2]).unwrap();
        assert_eq!(g.element_name(g.identity()), "1");
        assert_eq!(g.element_name(g.from_exponents(&[3, 1])), "a^3*b");
        assert_eq!(g.element_name(g.from_exponents(&[0, 1])), "b");
    }

    #[test]
    fn automorphisms_of_z8_fixing_elements() {
        let g = FiniteGroup::product_of_cyclics(&[8]).unwrap();
        let a = g.from_exponents(&[1]);
        // All four automorphisms a -> a^{1,3,5,7} fix a^4.
        let fixing_u = g.automorphisms_fixing(g.pow(a, 4)).unwrap();
        assert_eq!(fixing_u.len(), 4);
        // Only a -> a and a -> a^5 fix a^2.
        let fixing_a2 = g.automorphisms_fixing(g.pow(a, 2)).unwrap();
        assert_eq!(fixing_a2.len(), 2);
        for perm in &fixing_u {
            for x in g.elements() {
                for y in g.elements() {
                    assert_eq!(perm[g.mul(x, y)], g.mul(perm[x], perm[y]));
                }
            }
        }
    }

    #[test]
    fn automorphisms_of_z4_x_z2() {
        let g = FiniteGroup::product_of_cyclics(&[4, 2]).unwrap();
        let u = g.from_exponents(&[2, 0]);
        // Aut(Z4 x Z2) has order 8 and every automorphism fixes a^2.
        let autos = g.automorphisms_fixing(u).unwrap();
        assert_eq!(autos.len(), 8);
        let identity_perm: Vec<usize> = g.elements().collect();
        assert!(autos.contains(&identity_perm));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(FiniteGroup::product_of_cyclics(&[0]).is_err());
        assert!(FiniteGroup::product_of_cyclics(&[64, 64]).is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn random_products_satisfy_axioms(
            orders in prop::collection::vec(1u32..=6, 1..=3)
        ) {
            let g = FiniteGroup::product_of_cyclics(&orders).unwrap();
            if g.order() <= 36 {
                g.verify_axioms().unwrap();
            }
            for x in g.elements() {
                let ord = g.element_order(x);
                prop_assert_eq!(g.pow(x, ord as i64), g.identity());
                prop_assert_eq!(g.exponent() % ord, 0);
            }
        }
    }
}
