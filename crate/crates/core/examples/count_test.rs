// Audit: canonical-form invariance under random relabeling, applied to
// every child attempt in the real generation tree.
use std::collections::HashMap;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use symcfg::classify::{canonical_form_cells, CanonResult};
use symcfg::graph::Graph;
use symcfg::tree::UnionFind;

#[derive(Clone)]
struct Partial { v: usize, blocks: Vec<[usize;3]>, deg: Vec<u8>, pair: Vec<bool> }
impl Partial {
    fn root(v: usize) -> Self { Partial { v, blocks: vec![], deg: vec![0; v], pair: vec![false; v*v] } }
    fn pairq(&self, a: usize, b: usize) -> bool { self.pair[a*self.v+b] }
    fn push(&mut self, b: [usize;3]) {
        for (x,y) in [(b[0],b[1]),(b[0],b[2]),(b[1],b[2])] { self.pair[x*self.v+y]=true; self.pair[y*self.v+x]=true; }
        for &p in &b { self.deg[p] += 1; }
        self.blocks.push(b);
    }
    fn graph(&self) -> Graph {
        let mut edges = vec![];
        for (i,b) in self.blocks.iter().enumerate() { for &p in b { edges.push((p, self.v+i)); } }
        Graph::from_edges(self.v + self.blocks.len(), &edges).unwrap()
    }
    fn canonize(&self) -> CanonResult {
        let k = self.blocks.len();
        canonical_form_cells(&self.graph(), &[(0..self.v).collect(), (self.v..self.v+k).collect()])
    }
    fn candidates(&self) -> Vec<[usize;3]> {
        let v = self.v; let mut out = vec![];
        for a in 0..v { if self.deg[a]==3 {continue;}
          for b in a+1..v { if self.deg[b]==3 || self.pairq(a,b) {continue;}
            for c in b+1..v { if self.deg[c]==3 || self.pairq(a,c) || self.pairq(b,c) {continue;}
              out.push([a,b,c]); }}}
        out
    }
    fn completable(&self) -> bool {
        for p in 0..self.v {
            let need = (3 - self.deg[p]) as usize;
            if need == 0 { continue; }
            let partners = (0..self.v).filter(|&q| q!=p && self.deg[q]<3 && !self.pairq(p,q)).count();
            if partners < 2*need { return false; }
        }
        true
    }
}

struct Gen { v_target: usize, complete: u64, mismatches: u64, checks: u64, rng: ChaCha8Rng }

fn audit_invariance(gen: &mut Gen, p: &Partial, canon: &CanonResult) {
    // Shuffle points among points and blocks among blocks; recanonize.
    let v = p.v; let k = p.blocks.len();
    let mut pp: Vec<usize> = (0..v).collect();
    pp.shuffle(&mut gen.rng);
    let mut bp: Vec<usize> = (0..k).collect();
    bp.shuffle(&mut gen.rng);
    let mut q = Partial::root(v);
    let mut new_blocks = vec![[0usize;3]; k];
    for (i, b) in p.blocks.iter().enumerate() {
        let mut t = [pp[b[0]], pp[b[1]], pp[b[2]]];
        t.sort();
        new_blocks[bp[i]] = t;
    }
    for b in new_blocks { q.push(b); }
    let canon_q = q.canonize();
    gen.checks += 1;
    if canon_q.cert != canon.cert {
        gen.mismatches += 1;
        println!("INVARIANCE MISMATCH v={v} k={k}");
        println!("  original blocks: {:?}", p.blocks);
        println!("  shuffled blocks: {:?}", q.blocks);
    }
}

fn expand(gen: &mut Gen, partial: &Partial, canon: &CanonResult) {
    let v = partial.v; let k = partial.blocks.len();
    if k == v { gen.complete += 1; return; }
    if !partial.completable() { return; }
    let cands = partial.candidates();
    if cands.is_empty() { return; }
    let index: HashMap<[usize;3], usize> = cands.iter().enumerate().map(|(i,&t)| (t,i)).collect();
    let mut uf = UnionFind::new(cands.len());
    for g in &canon.generators {
        for (i,t) in cands.iter().enumerate() {
            let mut img = [g[t[0]], g[t[1]], g[t[2]]]; img.sort();
            uf.union(i, index[&img]);
        }
    }
    let mut seen = vec![false; cands.len()];
    for (i,&t) in cands.iter().enumerate() {
        let r = uf.find(i);
        if seen[r] { continue; }
        seen[r] = true;
        let mut child = partial.clone();
        child.push(t);
        let cc = child.canonize();
        audit_invariance(gen, &child, &cc);
        let canonical_block = (v..v+k+1).max_by_key(|&b| cc.relabeling[b]).unwrap();
        let accept = if canonical_block == v+k { true } else {
            let mut uf2 = UnionFind::new(v+k+1);
            for g in &cc.generators { for x in 0..v+k+1 { uf2.union(x, g[x]); } }
            uf2.find(canonical_block) == uf2.find(v+k)
        };
        if accept { expand(gen, &child, &cc); }
    }
}

fn main() {
    let v: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let t = std::time::Instant::now();
    let mut gen = Gen { v_target: v, complete: 0, mismatches: 0, checks: 0, rng: ChaCha8Rng::seed_from_u64(4242) };
    let _ = gen.v_target;
    let mut first = Partial::root(v);
    first.push([0,1,2]);
    let canon = first.canonize();
    expand(&mut gen, &first, &canon);
    println!("v={v}: complete={} checks={} mismatches={} in {:?}",
        gen.complete, gen.checks, gen.mismatches, t.elapsed());
}
