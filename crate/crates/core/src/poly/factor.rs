//! Irreducibility, distinct/equal-degree factorization and root finding.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Polynomial;
use crate::field::FieldElement;

/// The product of all distinct monic irreducible factors of one degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrreducibleComponent {
    pub degree: usize,
    pub product: Polynomial,
}

impl Polynomial {
    /// `self^e mod modulus`.
    pub fn pow_mod(&self, mut e: u128, modulus: &Polynomial) -> Polynomial {
        let mut base = self.rem(modulus).expect("nonzero modulus");
        let mut acc = Polynomial::one(self.field()).rem(modulus).expect("nonzero modulus");
        while e > 0 {
            if e & 1 == 1 {
                acc = (&acc * &base).rem(modulus).expect("nonzero modulus");
            }
            base = (&base * &base).rem(modulus).expect("nonzero modulus");
            e >>= 1;
        }
        acc
    }

    /// Ben-Or test: `gcd(x^(q^i) - x, self) = 1` for all `i <= deg/2`.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            None | Some(0) => return false,
            Some(n) => n,
        };
        let f = self.monic();
        let q = self.field().order() as u128;
        let x = Polynomial::x(self.field());
        let mut xq = x.clone();
        for _ in 0..n / 2 {
            xq = xq.pow_mod(q, &f);
            if !f.gcd(&(&xq - &x)).is_one() {
                return false;
            }
        }
        true
    }

    /// Degrees of the distinct irreducible factors, each with the product of
    /// those factors. Repeated factors are reported once.
    pub fn irreducible_components(&self) -> Vec<IrreducibleComponent> {
        assert!(!self.is_zero(), "factoring the zero polynomial");
        let q = self.field().order() as u128;
        let x = Polynomial::x(self.field());
        let mut rest = self.monic();
        let mut xq = x.clone();
        let mut out = Vec::new();
        let mut i = 0;
        while rest.deg() > 0 {
            i += 1;
            xq = xq.pow_mod(q, &rest);
            let g = rest.gcd(&(&xq - &x));
            if g.deg() > 0 {
                loop {
                    let common = rest.gcd(&g);
                    if common.deg() <= 0 {
                        break;
                    }
                    rest = rest.div_exact(&common).expect("gcd divides");
                }
                out.push(IrreducibleComponent { degree: i, product: g });
                if rest.deg() > 0 {
                    xq = xq.rem(&rest).expect("nonzero");
                }
            }
        }
        out
    }

    /// Degree of the smallest extension over which `self` splits into linear factors.
    pub fn splitting_degree(&self) -> usize {
        self.irreducible_components().iter().fold(1, |acc, c| lcm(acc, c.degree))
    }

    /// Splits a monic squarefree product of irreducibles of degree `d` into its factors.
    pub fn equal_degree_factors(&self, d: usize) -> Vec<Polynomial> {
        let f = self.monic();
        let n = f.degree().expect("nonzero");
        assert!(n.is_multiple_of(d));
        if n == d {
            return vec![f];
        }
        let field = f.field().clone();
        let q = field.order();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed ^ (n as u64) << 8 ^ d as u64);
        loop {
            let a = Polynomial::from_raw(&field, (0..n).map(|_| rng.gen_range(0..q)).collect());
            if a.deg() <= 0 {
                continue;
            }
            let splitter = if field.characteristic() == 2 {
                // trace map a + a^2 + ... + a^(2^(c*d - 1))
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..field.degree() * d {
                    t = (&t * &t).rem(&f).expect("nonzero");
                    acc = &acc + &t;
                }
                acc
            } else {
                // a^((q^d - 1)/2) computed as N(a)^((q - 1)/2), N(a) = a^(1 + q + ... + q^(d-1))
                let mut frob = a.clone();
                let mut norm = a.clone();
                for _ in 1..d {
                    frob = frob.pow_mod(q as u128, &f);
                    norm = (&norm * &frob).rem(&f).expect("nonzero");
                }
                &norm.pow_mod(((q - 1) / 2) as u128, &f) - &Polynomial::one(&field)
            };
            let g = f.gcd(&splitter);
            if g.deg() > 0 && g.deg() < n as i64 {
                let h = f.div_exact(&g).expect("gcd divides");
                let mut out = g.equal_degree_factors(d);
                out.extend(h.equal_degree_factors(d));
                return out;
            }
        }
    }

    /// Distinct roots in the coefficient field with their multiplicities, sorted by packed value.
    pub fn roots(&self) -> Vec<(FieldElement, usize)> {
        if self.deg() <= 0 {
            return Vec::new();
        }
        let field = self.field();
        let q = field.order() as u128;
        let f = self.monic();
        let x = Polynomial::x(field);
        let xq = x.pow_mod(q, &f);
        let linear_part = f.gcd(&(&xq - &x));
        if linear_part.deg() <= 0 {
            return Vec::new();
        }
        let mut roots: Vec<FieldElement> = linear_part
            .equal_degree_factors(1)
            .into_iter()
            .map(|lin| -lin.coeff(0))
            .collect();
        roots.sort_by_key(|r| r.value());
        roots
            .into_iter()
            .map(|r| {
                let m = self.root_multiplicity(&r);
                (r, m)
            })
            .collect()
    }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    a / gcd_usize(a, b) * b
}

fn gcd_usize(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}
