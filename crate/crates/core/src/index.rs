//! A trie over exponent vectors answering "does some stored monomial divide
//! this one" without scanning every stored generator.

use num_bigint::BigUint;

use crate::monomial::Monomial;

#[derive(Debug, Default)]
struct Node {
    // sorted ascending, parallel to `children`
    keys: Vec<BigUint>,
    children: Vec<Node>,
    item: Option<usize>,
}

#[derive(Debug)]
pub(crate) struct DivisorIndex {
    dim: usize,
    root: Node,
}

impl DivisorIndex {
    pub(crate) fn new(dim: usize) -> Self {
        DivisorIndex {
            dim,
            root: Node::default(),
        }
    }

    pub(crate) fn from_monomials<'a>(
        dim: usize,
        monomials: impl IntoIterator<Item = &'a Monomial>,
    ) -> Self {
        let mut index = DivisorIndex::new(dim);
        for (id, m) in monomials.into_iter().enumerate() {
            index.insert(m, id);
        }
        index
    }

    pub(crate) fn insert(&mut self, m: &Monomial, id: usize) {
        debug_assert_eq!(m.dim(), self.dim);
        let mut node = &mut self.root;
        for e in m.exponents() {
            let pos = match node.keys.binary_search(e) {
                Ok(pos) => pos,
                Err(pos) => {
                    node.keys.insert(pos, e.clone());
                    node.children.insert(pos, Node::default());
                    pos
                }
            };
            node = &mut node.children[pos];
        }
        node.item.get_or_insert(id);
    }

    /// Id of some stored monomial dividing `m`.
    pub(crate) fn find_divisor(&self, m: &Monomial) -> Option<usize> {
        fn walk(node: &Node, exps: &[BigUint]) -> Option<usize> {
            let Some((first, rest)) = exps.split_first() else {
                return node.item;
            };
            for (key, child) in node.keys.iter().zip(&node.children) {
                if key > first {
                    break;
                }
                if let Some(id) = walk(child, rest) {
                    return Some(id);
                }
            }
            None
        }
        walk(&self.root, m.exponents())
    }

    /// Id of some stored divisor of `m` whose degree is at most `bound`.
    pub(crate) fn find_divisor_of_degree_at_most(
        &self,
        m: &Monomial,
        bound: &BigUint,
    ) -> Option<usize> {
        fn walk(node: &Node, exps: &[BigUint], acc: &BigUint, bound: &BigUint) -> Option<usize> {
            let Some((first, rest)) = exps.split_first() else {
                return node.item;
            };
            for (key, child) in node.keys.iter().zip(&node.children) {
                if key > first {
                    break;
                }
                let next = acc + key;
                if &next > bound {
                    break;
                }
                if let Some(id) = walk(child, rest, &next, bound) {
                    return Some(id);
                }
            }
            None
        }
        walk(&self.root, m.exponents(), &BigUint::default(), bound)
    }
}
