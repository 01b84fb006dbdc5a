//! Vertex codes and the nested list/node gadgets that turn "is `{u, v}` an
//! edge" and "do two `k`-cliques form a `2k`-clique" into LCS questions.
//!
//! * `code(v)`: the `L`-bit binary form of `v`, most significant bit
//!   first, with `0 -> 01` and `1 -> 10`, where `L = max(⌈log n⌉, 2)`.
//!   Every code has type `(2L, L)`.
//! * `LG(v)`: gadget `X` side over the codes of `N(v)` (ascending), padded
//!   with `n - |N(v)|` copies of `1^L 0^L`, with `m = 1`.
//! * `NG(v)`: gadget `Y` side over `[code(v)]` against `n` list entries.
//! * `δ_LCS(LG(u), NG(v)) = c0` exactly when `{u, v}` is an edge, and is
//!   larger otherwise.
//! * `CLG(t)`, `CNG(t)`: the same gadget one level up over `k²` entries,
//!   `LG(u_1)` `k` times, ..., `LG(u_k)` `k` times against
//!   `NG(u_1), ..., NG(u_k)` repeated `k` times, so entry `j + k(i-1)` pairs
//!   `LG(u_i)` with `NG(v_j)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gadget::{ga_constant, ga_x, ga_y};
use crate::graph::{Clique, Graph};
use crate::seq::{Seq, SeqType, Symbol};
use crate::solvers::lcs_delta_bitparallel;

/// Bits per vertex id: `⌈log2 n⌉`, but at least 2. With a single bit the
/// pad block `10` would equal the code of vertex 1.
pub fn code_bits(n: usize) -> usize {
    ((usize::BITS - (n - 1).leading_zeros()) as usize).max(2)
}

/// Type of every vertex code and pad block.
pub fn code_type(n: usize) -> SeqType {
    let l = code_bits(n);
    SeqType { ell: 2 * l, s: l }
}

pub fn vertex_code(v: usize, n: usize) -> Result<Seq> {
    if n < 2 {
        return Err(Error::GraphTooSmall { n });
    }
    if v >= n {
        return Err(Error::VertexOutOfRange { v, n });
    }
    let l = code_bits(n);
    let mut out = Seq::with_capacity(2 * l);
    for bit in (0..l).rev() {
        if (v >> bit) & 1 == 1 {
            out.push(Symbol::One);
            out.push(Symbol::Zero);
        } else {
            out.push(Symbol::Zero);
            out.push(Symbol::One);
        }
    }
    Ok(out)
}

/// `1^L 0^L`, which differs from every vertex code.
pub fn pad_block(n: usize) -> Seq {
    let l = code_bits(n);
    let mut out = Seq::run(Symbol::One, l);
    out.push_run(Symbol::Zero, l);
    out
}

pub fn list_gadget(v: usize, g: &Graph) -> Result<Seq> {
    let n = g.n();
    check_graph(g)?;
    let mut items = g
        .neighbors(v)
        .into_iter()
        .map(|u| vertex_code(u, n))
        .collect::<Result<Vec<_>>>()?;
    items.resize(n, pad_block(n));
    ga_x(1, code_type(n), &items)
}

pub fn node_gadget(v: usize, n: usize) -> Result<Seq> {
    ga_y(n, code_type(n), &[vertex_code(v, n)?])
}

/// `c0`: the value of `δ_LCS(LG(u), NG(v))` on edges.
pub fn edge_constant_c0(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::GraphTooSmall { n });
    }
    let t0 = code_type(n);
    ga_constant(n, 1, t0, t0)
}

/// Types of `LG(·)` and `NG(·)` for graphs on `n` vertices.
pub fn lg_ng_types(n: usize) -> Result<(SeqType, SeqType)> {
    if n < 2 {
        return Err(Error::GraphTooSmall { n });
    }
    crate::gadget::GadgetParams::STANDARD.output_types(n, 1, code_type(n), code_type(n))
}

fn check_graph(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        Err(Error::GraphTooSmall { n: g.n() })
    } else {
        Ok(())
    }
}

/// Symbol counts shared by every `CNG(t)` and every `CLG(t)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GadgetCounts {
    pub cng0: u64,
    pub cng1: u64,
    pub clg0: u64,
    pub clg1: u64,
}

impl GadgetCounts {
    /// From explicit payloads; used when gadgets are assembled around arbitrary strings.
    pub fn of(clg: &Seq, cng: &Seq) -> GadgetCounts {
        let (a, b) = (clg.counts(), cng.counts());
        GadgetCounts {
            cng0: b.zero as u64,
            cng1: b.one as u64,
            clg0: a.zero as u64,
            clg1: a.one as u64,
        }
    }

    pub fn total(&self) -> u64 {
        self.cng0 + self.cng1 + self.clg0 + self.clg1
    }

    pub fn clg_len(&self) -> u64 {
        self.clg0 + self.clg1
    }

    pub fn cng_len(&self) -> u64 {
        self.cng0 + self.cng1
    }
}

/// Everything derived from one `(G, k)`: the per-vertex gadgets, the clique
/// list in enumeration order, and the constants.
#[derive(Clone, Debug)]
pub struct CliqueEncoding {
    graph: Graph,
    k: usize,
    cliques: Vec<Clique>,
    lg: Vec<Seq>,
    ng: Vec<Seq>,
    t_lg: SeqType,
    t_ng: SeqType,
    c0: usize,
    c1: usize,
}

impl CliqueEncoding {
    pub fn new(graph: &Graph, k: usize) -> Result<CliqueEncoding> {
        check_graph(graph)?;
        if k == 0 {
            return Err(Error::ZeroK);
        }
        let n = graph.n();
        let lg = (0..n).map(|v| list_gadget(v, graph)).collect::<Result<Vec<_>>>()?;
        let ng = (0..n).map(|v| node_gadget(v, n)).collect::<Result<Vec<_>>>()?;
        let (t_lg, t_ng) = lg_ng_types(n)?;
        let c0 = edge_constant_c0(n)?;
        let k2 = k * k;
        let c1 = k2 * c0 + ga_constant(k2, k2, t_lg, t_ng)?;
        Ok(CliqueEncoding {
            graph: graph.clone(),
            k,
            cliques: graph.k_cliques(k),
            lg,
            ng,
            t_lg,
            t_ng,
            c0,
            c1,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `C_k` in lexicographic order.
    pub fn cliques(&self) -> &[Clique] {
        &self.cliques
    }

    pub fn list_gadget(&self, v: usize) -> &Seq {
        &self.lg[v]
    }

    pub fn node_gadget(&self, v: usize) -> &Seq {
        &self.ng[v]
    }

    pub fn c0(&self) -> usize {
        self.c0
    }

    /// `c1 = k² c0 + C(k², k², T_LG, T_NG)`.
    pub fn c1(&self) -> usize {
        self.c1
    }

    fn check_clique(&self, t: &Clique) -> Result<()> {
        if t.len() != self.k {
            return Err(Error::CliqueSize { expected: self.k, found: t.len() });
        }
        Clique::new(&self.graph, t.vertices().to_vec()).map(|_| ())
    }

    pub fn clique_list_gadget(&self, t: &Clique) -> Result<Seq> {
        self.check_clique(t)?;
        let items: Vec<Seq> = t
            .vertices()
            .iter()
            .flat_map(|&u| std::iter::repeat_n(self.lg[u].clone(), self.k))
            .collect();
        ga_x(self.k * self.k, self.t_ng, &items)
    }

    pub fn clique_node_gadget(&self, t: &Clique) -> Result<Seq> {
        self.check_clique(t)?;
        let items: Vec<Seq> = (0..self.k)
            .flat_map(|_| t.vertices().iter().map(|&v| self.ng[v].clone()))
            .collect();
        ga_y(self.k * self.k, self.t_lg, &items)
    }

    /// Symbol counts of `CLG(t)` / `CNG(t)`, from the gadget types alone.
    pub fn counts(&self) -> Result<GadgetCounts> {
        let k2 = self.k * self.k;
        let (clg, cng) =
            crate::gadget::GadgetParams::STANDARD.output_types(k2, k2, self.t_lg, self.t_ng)?;
        Ok(GadgetCounts {
            cng0: cng.zeros() as u64,
            cng1: cng.s as u64,
            clg0: clg.zeros() as u64,
            clg1: clg.s as u64,
        })
    }

    /// `δ_LCS(CLG(t1), CNG(t2)) == c1`.
    pub fn is_2k_clique_by_lcs(&self, t1: &Clique, t2: &Clique) -> Result<bool> {
        let d = lcs_delta_bitparallel(&self.clique_list_gadget(t1)?, &self.clique_node_gadget(t2)?)?;
        Ok(d == self.c1)
    }

    /// All `CLG(t)` and `CNG(t)` in clique order.
    pub fn all_gadgets(&self) -> Result<(Vec<Seq>, Vec<Seq>)> {
        let clg = self.cliques.iter().map(|t| self.clique_list_gadget(t)).collect::<Result<_>>()?;
        let cng = self.cliques.iter().map(|t| self.clique_node_gadget(t)).collect::<Result<_>>()?;
        Ok((clg, cng))
    }
}
