use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::element::GroupElement;
use super::spec::SubgroupSpec;
use crate::error::{Error, Result};
use crate::exactnum::{CycloField, CycloNum};

/// A finite subgroup of SL2 given by its elements, its multiplication table
/// and its conjugacy classes.
///
/// Elements are numbered in breadth-first order from the identity (index 0)
/// over the standard generators. Classes are ordered by their smallest
/// element index, which is also the class representative.
#[derive(Debug)]
pub struct FiniteSubgroup {
    spec: SubgroupSpec,
    field: Arc<CycloField>,
    elements: Vec<GroupElement>,
    index: HashMap<Vec<BigInt>, usize>,
    mul: Vec<u32>,
    inverse: Vec<usize>,
    orders: Vec<usize>,
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    exponent: usize,
}

impl FiniteSubgroup {
    pub fn generate(spec: SubgroupSpec) -> Result<Arc<FiniteSubgroup>> {
        Self::generate_in(spec, &CycloField::new(spec.conductor()))
    }

    /// Generates `spec` with matrix entries in `field`.
    pub fn generate_in(spec: SubgroupSpec, field: &Arc<CycloField>) -> Result<Arc<FiniteSubgroup>> {
        let gens = spec.generators(field);
        let expected = spec.order();
        let identity = GroupElement::new([
            CycloNum::one(field),
            CycloNum::zero(field),
            CycloNum::zero(field),
            CycloNum::one(field),
        ]);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity.key(), 0usize);
        // right multiplication by generators, and a spanning tree
        let mut right: Vec<Vec<usize>> = Vec::new();
        let mut parent: Vec<(usize, usize)> = vec![(0, 0)];
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let mut row = Vec::with_capacity(gens.len());
            for (s, g) in gens.iter().enumerate() {
                let y = elements[x].mul(g);
                let key = y.key();
                let idx = match index.get(&key) {
                    Some(&i) => i,
                    None => {
                        if elements.len() == expected {
                            return Err(Error::ClosureOverflow { expected });
                        }
                        let i = elements.len();
                        index.insert(key, i);
                        elements.push(y);
                        parent.push((x, s));
                        queue.push_back(i);
                        i
                    }
                };
                row.push(idx);
            }
            right.push(row);
        }
        let n = elements.len();
        if n != expected {
            return Err(Error::WrongOrder { expected, found: n });
        }
        // a * b = (a * parent(b)) * gen(b), filled in breadth-first order of b
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            mul[a * n] = a as u32;
            for b in 1..n {
                let (p, s) = parent[b];
                let ap = mul[a * n + p] as usize;
                mul[a * n + b] = right[ap][s] as u32;
            }
        }
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            for b in 0..n {
                if mul[a * n + b] == 0 {
                    inverse[a] = b;
                    break;
                }
            }
            if inverse[a] == usize::MAX {
                return Err(Error::Internal("missing inverse".into()));
            }
        }
        let mut orders = vec![0usize; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = mul[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }
        let exponent = orders.iter().fold(1usize, |e, &o| e.lcm(&o));
        let mut class_of = vec![usize::MAX; n];
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let c = classes.len();
            let mut members = Vec::new();
            for g in 0..n {
                let y = mul[mul[g * n + x] as usize * n + inverse[g]] as usize;
                if class_of[y] == usize::MAX {
                    class_of[y] = c;
                    members.push(y);
                }
            }
            members.sort_unstable();
            classes.push(members);
        }
        Ok(Arc::new(FiniteSubgroup {
            spec,
            field: field.clone(),
            elements,
            index,
            mul,
            inverse,
            orders,
            classes,
            class_of,
            exponent,
        }))
    }

    pub fn spec(&self) -> SubgroupSpec {
        self.spec
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    /// Index of a matrix in this group, if it belongs to it.
    pub fn find(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(&g.key()).copied()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn element_order(&self, a: usize) -> usize {
        self.orders[a]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }

    pub fn power(&self, a: usize, k: usize) -> usize {
        let mut x = 0;
        for _ in 0..k {
            x = self.mul(x, a);
        }
        x
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_of(&self, a: usize) -> usize {
        self.class_of[a]
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    /// Class containing the inverses of the elements of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        self.class_of(self.inverse(self.representative(c)))
    }

    /// Index of `-1`, if present.
    pub fn minus_identity(&self) -> Option<usize> {
        let f = &self.field;
        let m = GroupElement::new([
            CycloNum::from_int(f, -1),
            CycloNum::zero(f),
            CycloNum::zero(f),
            CycloNum::from_int(f, -1),
        ]);
        self.find(&m)
    }

    /// Trace of the class representatives.
    pub fn class_traces(&self) -> Vec<CycloNum> {
        (0..self.num_classes())
            .map(|c| self.elements[self.representative(c)].trace())
            .collect()
    }
}
