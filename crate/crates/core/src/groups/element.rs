use std::fmt;

use num_bigint::BigInt;

use crate::exactnum::CycloNum;

/// 2x2 matrix over a cyclotomic field, entries in row-major order.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    m: [CycloNum; 4],
}

impl GroupElement {
    pub fn new(m: [CycloNum; 4]) -> Self {
        GroupElement { m }
    }

    pub fn entries(&self) -> &[CycloNum; 4] {
        &self.m
    }

    pub fn mul(&self, o: &GroupElement) -> GroupElement {
        let [a, b, c, d] = &self.m;
        let [e, f, g, h] = &o.m;
        GroupElement::new([
            &(a * e) + &(b * g),
            &(a * f) + &(b * h),
            &(c * e) + &(d * g),
            &(c * f) + &(d * h),
        ])
    }

    pub fn det(&self) -> CycloNum {
        let [a, b, c, d] = &self.m;
        &(a * d) - &(b * c)
    }

    pub fn trace(&self) -> CycloNum {
        &self.m[0] + &self.m[3]
    }

    /// Hash key: the coordinates of the first column.
    ///
    /// Inside a finite subgroup of SL2 two elements with the same first
    /// column differ by a unipotent element of finite order, which is the
    /// identity, so the first column determines the element.
    pub fn key(&self) -> Vec<BigInt> {
        let mut k = Vec::new();
        for x in [&self.m[0], &self.m[2]] {
            let (num, den) = x.raw_parts();
            k.extend(num.iter().cloned());
            k.push(den.clone());
        }
        k
    }

    pub fn lift_to(&self, field: &std::sync::Arc<crate::exactnum::CycloField>) -> GroupElement {
        GroupElement::new(self.m.clone().map(|x| x.lift_to(field)))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.m;
        write!(f, "[[{a}, {b}], [{c}, {d}]]")
    }
}
