//! Brute-force vacuum expectation values.
//!
//! Words are rewritten left to right with single adjacent swaps; no normal
//! form, no caching. Slow, but shares nothing with the PBW engine beyond the
//! bracket table.

use gca_core::algebra::{bracket, AlgebraId, Family, Generator};
use gca_core::symbolic::{MultiPoly, Rational, Var};

pub struct Oracle {
    pub values: [Option<Rational>; 6],
    /// Normal order of zero modes before substitution.
    pub order: [Family; 4],
}

impl Oracle {
    pub fn symbolic() -> Self {
        Oracle { values: Default::default(), order: [Family::L, Family::J, Family::P1, Family::P2] }
    }

    fn value(&self, v: Var) -> MultiPoly {
        match &self.values[v.index()] {
            Some(x) => MultiPoly::constant(x.clone()),
            None => MultiPoly::var(v),
        }
    }

    fn eigen(&self, f: Family) -> MultiPoly {
        match f {
            Family::L => self.value(Var::H),
            Family::J => self.value(Var::Mu),
            Family::P1 => self.value(Var::Rho1),
            Family::P2 => self.value(Var::Rho2),
            Family::Theta => unreachable!(),
        }
    }

    fn rank(&self, g: &Generator) -> usize {
        self.order.iter().position(|&f| f == g.family).unwrap()
    }

    /// `<0| word |0>`.
    pub fn vev(&self, word: &[Generator]) -> MultiPoly {
        let mut total = MultiPoly::zero();
        let mut work = vec![(word.to_vec(), MultiPoly::one())];
        while let Some((w, c)) = work.pop() {
            if c.is_zero() {
                continue;
            }
            if w.is_empty() {
                total += &c;
                continue;
            }
            if w[0].mode < 0 || w[w.len() - 1].mode > 0 {
                continue;
            }
            let class = |g: &Generator| g.mode.signum();
            let swap = (0..w.len() - 1).rev().find(|&i| class(&w[i]) > class(&w[i + 1]));
            let swap = swap.or_else(|| (0..w.len() - 1).find(|&i| self.rank(&w[i]) > self.rank(&w[i + 1])));
            let Some(i) = swap else {
                let mut v = c;
                for g in &w {
                    v = &v * &self.eigen(g.family);
                }
                total += &v;
                continue;
            };
            // x y = y x + [x, y]
            let (x, y) = (w[i], w[i + 1]);
            let mut swapped = w.clone();
            swapped.swap(i, i + 1);
            work.push((swapped, c.clone()));
            let b = bracket(&x, &y, AlgebraId::GHat).unwrap();
            for (g, d) in b.terms() {
                let mut nw = w[..i].to_vec();
                nw.push(*g);
                nw.extend_from_slice(&w[i + 2..]);
                work.push((nw, &c * d));
            }
            let central = b.central_term().specialize(&self.values);
            if !central.is_zero() {
                let mut nw = w[..i].to_vec();
                nw.extend_from_slice(&w[i + 2..]);
                work.push((nw, &c * &central));
            }
        }
        total
    }

    /// `<0| omega(x) y |0>` for words `x`, `y` applied to the vacuum.
    pub fn pairing(&self, x: &[Generator], y: &[Generator]) -> MultiPoly {
        let mut w: Vec<Generator> = x.iter().rev().map(Generator::omega).collect();
        w.extend_from_slice(y);
        self.vev(&w)
    }
}
