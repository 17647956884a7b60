//! Forcing sets, exact forcing numbers and forcing spectra.
//!
//! `S ⊆ M` forces `M` exactly when no `M`-alternating cycle avoids `S`, so
//! the forcing number is a minimum hitting set of the alternating cycles by
//! matching edges. The solver finds it by iterative deepening on `|S|`,
//! branching on the matching edges of a shortest unhit cycle, with greedy
//! disjoint-cycle packings as the lower bound.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;

use crate::alternating::{max_disjoint_alternating_cycles, AltGraph};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::matching::{enumerate_perfect_matchings, EdgeSet, Matching};

// Expansion cap for the shortest-cycle search on non-bipartite graphs.
const GENERAL_SHORTEST_BUDGET: u64 = 20_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForcingCertificate {
    pub matching: Matching,
    pub set: EdgeSet,
    pub verified: bool,
    pub size: usize,
}

impl ForcingCertificate {
    /// Re-runs the forcing test and records the outcome.
    pub fn verify(matching: Matching, set: EdgeSet, g: &Graph) -> Result<ForcingCertificate> {
        let verified = is_forcing_set(g, &matching, &set)?;
        Ok(ForcingCertificate {
            size: set.len(),
            matching,
            set,
            verified,
        })
    }
}

/// True iff `set` is contained in no perfect matching of `g` other than `m`.
pub fn is_forcing_set(g: &Graph, m: &Matching, set: &EdgeSet) -> Result<bool> {
    Ok(crate::alternating::find_alternating_cycle_avoiding(g, m, set)?.is_none())
}

/// Exact minimum forcing-set solver with an optional cap on search nodes.
#[derive(Clone, Copy, Debug, Default)]
pub struct ForcingSolver {
    budget: Option<u64>,
}

struct Search<'s, 'a> {
    alt: &'s AltGraph<'a>,
    alive: Vec<bool>,
    forbidden: Vec<bool>,
    chosen: Vec<usize>,
    solution: Option<Vec<usize>>,
    nodes: u64,
    budget: Option<u64>,
}

impl Search<'_, '_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        match self.budget {
            Some(limit) if self.nodes > limit => Err(Error::BudgetExhausted(limit)),
            _ => Ok(()),
        }
    }

    /// Looks for a hitting set of size at most `target` extending `chosen`;
    /// on success the set is left in `solution`.
    fn extend(&mut self, target: usize) -> Result<bool> {
        self.tick()?;
        let packing = self
            .alt
            .greedy_packing(&self.alive, GENERAL_SHORTEST_BUDGET);
        let Some(cycle) = packing.first() else {
            self.solution = Some(self.chosen.clone());
            return Ok(true);
        };
        if self.chosen.len() + packing.len() > target {
            return Ok(false);
        }
        let candidates: Vec<usize> = self
            .alt
            .cycle_edges(cycle)
            .into_iter()
            .filter(|&e| !self.forbidden[e])
            .collect();
        let mut excluded = Vec::with_capacity(candidates.len());
        let mut outcome = Ok(false);
        for e in candidates {
            self.alive[e] = false;
            self.chosen.push(e);
            let hit = self.extend(target);
            self.chosen.pop();
            self.alive[e] = true;
            if !matches!(hit, Ok(false)) {
                outcome = hit;
                break;
            }
            // Later branches must not pick `e`: that subtree is exhausted.
            self.forbidden[e] = true;
            excluded.push(e);
        }
        for x in excluded {
            self.forbidden[x] = false;
        }
        outcome
    }
}

impl ForcingSolver {
    pub fn new() -> Self {
        ForcingSolver { budget: None }
    }

    /// Caps search nodes per forcing-number computation; exceeding it gives
    /// [`Error::BudgetExhausted`].
    pub fn with_budget(budget: Option<u64>) -> Self {
        ForcingSolver { budget }
    }

    pub fn budget(&self) -> Option<u64> {
        self.budget
    }

    fn search<'s, 'a>(&self, alt: &'s AltGraph<'a>) -> Search<'s, 'a> {
        Search {
            alt,
            alive: vec![true; alt.edge_count()],
            forbidden: vec![false; alt.edge_count()],
            chosen: Vec::new(),
            solution: None,
            nodes: 0,
            budget: self.budget,
        }
    }

    /// Is there a forcing set of size at most `target`? Returns one if so.
    pub fn forcing_set_within(
        &self,
        g: &Graph,
        m: &Matching,
        target: usize,
    ) -> Result<Option<EdgeSet>> {
        m.check_perfect_on(g)?;
        let alt = AltGraph::new(g, m);
        let mut search = self.search(&alt);
        if search.extend(target)? {
            return Ok(Some(self.collect(&alt, &search)?));
        }
        Ok(None)
    }

    /// Lower bound from a greedy packing of disjoint alternating cycles.
    pub fn lower_bound(&self, g: &Graph, m: &Matching) -> usize {
        let alt = AltGraph::new(g, m);
        alt.greedy_packing(&vec![true; alt.edge_count()], GENERAL_SHORTEST_BUDGET)
            .len()
    }

    /// `f(G, M)` with a minimum forcing set as certificate.
    pub fn solve(&self, g: &Graph, m: &Matching) -> Result<ForcingCertificate> {
        m.check_perfect_on(g)?;
        let alt = AltGraph::new(g, m);
        let mut search = self.search(&alt);
        let start = alt
            .greedy_packing(&search.alive, GENERAL_SHORTEST_BUDGET)
            .len();
        for target in start..=alt.edge_count() {
            if search.extend(target)? {
                let set = self.collect(&alt, &search)?;
                return ForcingCertificate::verify(m.clone(), set, g);
            }
        }
        unreachable!("the whole matching is always a forcing set")
    }

    fn collect(&self, alt: &AltGraph<'_>, search: &Search<'_, '_>) -> Result<EdgeSet> {
        let chosen = search.solution.as_ref().expect("set on success");
        Ok(chosen.iter().map(|&e| alt.edge(e)).collect())
    }
}

/// `f(G, M)` and a minimum forcing set.
pub fn forcing_number(g: &Graph, m: &Matching) -> Result<(usize, ForcingCertificate)> {
    let cert = ForcingSolver::new().solve(g, m)?;
    Ok((cert.size, cert))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectrumResult {
    /// Achieved forcing numbers mapped to the first matching (in enumeration
    /// order) that achieves each.
    pub witnesses: BTreeMap<usize, Matching>,
    pub f_min: usize,
    pub f_max: usize,
    pub matching_count: usize,
}

impl SpectrumResult {
    pub fn values(&self) -> Vec<usize> {
        self.witnesses.keys().copied().collect()
    }

    /// True when the values form a contiguous run of integers.
    pub fn is_interval(&self) -> bool {
        self.witnesses.len() == self.f_max - self.f_min + 1
    }
}

impl ForcingSolver {
    /// `Spec(G)`: every perfect matching is solved, in parallel on the
    /// current rayon pool. The result does not depend on the worker count.
    pub fn spectrum(&self, g: &Graph) -> Result<SpectrumResult> {
        let matchings: Vec<Matching> = enumerate_perfect_matchings(g).collect();
        if matchings.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let numbers: Vec<usize> = matchings
            .par_iter()
            .map(|m| self.solve(g, m).map(|c| c.size))
            .collect::<Result<_>>()?;
        let mut witnesses = BTreeMap::new();
        for (m, &f) in matchings.iter().zip(&numbers) {
            witnesses.entry(f).or_insert_with(|| m.clone());
        }
        Ok(SpectrumResult {
            f_min: *witnesses.keys().next().unwrap(),
            f_max: *witnesses.keys().next_back().unwrap(),
            matching_count: matchings.len(),
            witnesses,
        })
    }

    /// `f(G)`, skipping matchings whose lower bound cannot beat the running
    /// minimum and capping each search just below it.
    pub fn min_forcing_number(&self, g: &Graph) -> Result<usize> {
        let matchings: Vec<Matching> = enumerate_perfect_matchings(g).collect();
        if matchings.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let best = AtomicUsize::new(usize::MAX);
        matchings.par_iter().try_for_each(|m| -> Result<()> {
            let current = best.load(Ordering::Relaxed);
            if current == usize::MAX {
                let f = self.solve(g, m)?.size;
                best.fetch_min(f, Ordering::Relaxed);
                return Ok(());
            }
            if current == 0 || self.lower_bound(g, m) >= current {
                return Ok(());
            }
            if self.forcing_set_within(g, m, current - 1)?.is_some() {
                let f = self.solve(g, m)?.size;
                best.fetch_min(f, Ordering::Relaxed);
            }
            Ok(())
        })?;
        Ok(best.into_inner())
    }

    /// `F(G)`, skipping matchings that have a forcing set no larger than the
    /// running maximum.
    pub fn max_forcing_number(&self, g: &Graph) -> Result<usize> {
        let matchings: Vec<Matching> = enumerate_perfect_matchings(g).collect();
        if matchings.is_empty() {
            return Err(Error::NoPerfectMatching);
        }
        let best = AtomicUsize::new(0);
        matchings.par_iter().try_for_each(|m| -> Result<()> {
            let current = best.load(Ordering::Relaxed);
            if self.forcing_set_within(g, m, current)?.is_none() {
                let f = self.solve(g, m)?.size;
                best.fetch_max(f, Ordering::Relaxed);
            }
            Ok(())
        })?;
        Ok(best.into_inner())
    }
}

pub fn forcing_spectrum(g: &Graph) -> Result<SpectrumResult> {
    ForcingSolver::new().spectrum(g)
}

pub fn min_forcing_number(g: &Graph) -> Result<usize> {
    ForcingSolver::new().min_forcing_number(g)
}

pub fn max_forcing_number(g: &Graph) -> Result<usize> {
    ForcingSolver::new().max_forcing_number(g)
}

/// Forcing number next to the maximum disjoint alternating-cycle packing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PackingReport {
    pub forcing_number: usize,
    pub packing_number: usize,
    pub equal: bool,
    /// Set when the graph is not known to be planar bipartite, so equality
    /// is not expected and only `packing <= forcing` holds.
    pub informational: bool,
}

pub fn packing_equals_forcing_check(g: &Graph, m: &Matching) -> Result<PackingReport> {
    let (forcing, _) = forcing_number(g, m)?;
    let (packing, _) = max_disjoint_alternating_cycles(g, m)?;
    Ok(PackingReport {
        forcing_number: forcing,
        packing_number: packing,
        equal: forcing == packing,
        informational: !g.is_planar_bipartite(),
    })
}
