//! Extensions GF(q) -> GF(q^e) and the embeddings between them.
//!
//! The valuation oracle works over the splitting field of whatever
//! polynomials carry a divisor's support; this module builds that field and
//! transports base-field data into it.

use crate::field::{Field, FieldElement, FieldError};
use crate::poly::Polynomial;

/// A field homomorphism `source -> target`, fixed by the image of the
/// source generator (a root of the source modulus in the target).
#[derive(Clone, Debug)]
pub struct Embedding {
    source: Field,
    target: Field,
    generator_image: u64,
}

impl Embedding {
    /// The identity on `field`.
    pub fn identity(field: &Field) -> Embedding {
        let generator_image = if field.is_prime_field() { 0 } else { field.characteristic() };
        Embedding { source: field.clone(), target: field.clone(), generator_image }
    }

    /// Any embedding of `source` into `target`; `None` when `source` is not a subfield.
    pub fn new(source: &Field, target: &Field) -> Option<Embedding> {
        if source.characteristic() != target.characteristic() || !target.degree().is_multiple_of(source.degree()) {
            return None;
        }
        if source == target {
            return Some(Embedding::identity(source));
        }
        if source.is_prime_field() {
            return Some(Embedding { source: source.clone(), target: target.clone(), generator_image: 0 });
        }
        // prime-field residues embed as constants, so the source modulus reads directly in the target
        let modulus = Polynomial::from_raw(target, source.modulus().to_vec());
        let root = modulus.roots().into_iter().next()?.0;
        Some(Embedding { source: source.clone(), target: target.clone(), generator_image: root.value() })
    }

    pub fn source(&self) -> &Field {
        &self.source
    }

    pub fn target(&self) -> &Field {
        &self.target
    }

    /// Relative degree [target : source].
    pub fn degree(&self) -> usize {
        self.target.degree() / self.source.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.source == self.target
    }

    pub(crate) fn map_raw(&self, a: u64) -> u64 {
        if self.is_identity() {
            return a;
        }
        let p = self.source.characteristic();
        if self.source.is_prime_field() {
            return a;
        }
        // Horner in the generator image over the base-p digits of a
        let mut digits = vec![0u64; self.source.degree()];
        self.source.unpack(a, &mut digits);
        let t = &self.target;
        debug_assert!(digits.iter().all(|&d| d < p));
        digits.iter().rev().fold(0u64, |acc, &d| t.add(t.mul(acc, self.generator_image), d))
    }

    pub fn map(&self, a: &FieldElement) -> FieldElement {
        assert!(a.field() == &self.source, "element outside the embedding source");
        self.target.wrap(self.map_raw(a.value()))
    }

    pub fn map_poly(&self, f: &Polynomial) -> Polynomial {
        assert!(f.field() == &self.source, "polynomial outside the embedding source");
        Polynomial::from_raw(&self.target, f.coeffs_raw().iter().map(|&c| self.map_raw(c)).collect())
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &Embedding) -> Embedding {
        assert!(other.source == self.target);
        let generator_image = if self.source.is_prime_field() {
            0
        } else {
            other.map_raw(self.generator_image)
        };
        Embedding { source: self.source.clone(), target: other.target.clone(), generator_image }
    }
}

impl Field {
    /// The degree-`e` extension of `self` (realised as GF(p^(c*e)) with its
    /// default modulus) together with the embedding of `self` into it.
    pub fn extension(&self, e: usize) -> Result<Embedding, FieldError> {
        if e == 0 {
            return Err(FieldError::ZeroDegree);
        }
        if e == 1 {
            return Ok(Embedding::identity(self));
        }
        let target = Field::new(self.characteristic(), self.degree() * e, None)?;
        Ok(Embedding::new(self, &target).expect("subfield of a field of multiple degree"))
    }
}
