//! Exhaustive backtracking search for a Hamiltonian cycle of the flip graph,
//! used to cross-check the constructive generator on small polygons.

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::polygon::{Catalog, Triangulation};

pub const SEARCH_MAX_M: usize = 8;

struct Search<'a> {
    adj: &'a [Vec<u32>],
    visited: Vec<bool>,
    /// Unvisited neighbors of each vertex.
    free: Vec<u32>,
    path: Vec<u32>,
}

impl Search<'_> {
    fn visit(&mut self, v: u32) {
        self.visited[v as usize] = true;
        self.path.push(v);
        for &w in &self.adj[v as usize] {
            self.free[w as usize] -= 1;
        }
    }

    fn unvisit(&mut self) {
        let v = self.path.pop().expect("non-empty path");
        self.visited[v as usize] = false;
        for &w in &self.adj[v as usize] {
            self.free[w as usize] += 1;
        }
    }

    /// Every unvisited vertex still needs two usable neighbors, and the
    /// unvisited vertices must all be reachable from the path's end.
    fn feasible(&self) -> bool {
        let end = *self.path.last().expect("non-empty path");
        let start = self.path[0];
        let touches = |w: u32, x: u32| u32::from(self.adj[w as usize].contains(&x));
        if self.free[start as usize] == 0 {
            return false;
        }
        for &v in [end, self.path[self.path.len().saturating_sub(2)]].iter() {
            for &w in &self.adj[v as usize] {
                if !self.visited[w as usize] && self.free[w as usize] + touches(w, end) + touches(w, start) < 2 {
                    return false;
                }
            }
        }
        let remaining = self.visited.iter().filter(|&&x| !x).count();
        let mut seen = vec![false; self.adj.len()];
        let mut stack = vec![end];
        let mut reached = 0;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v as usize] {
                if !self.visited[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == remaining
    }

    fn extend(&mut self) -> bool {
        let v = *self.path.last().expect("non-empty path");
        if self.path.len() == self.adj.len() {
            return self.adj[v as usize].contains(&self.path[0]);
        }
        if !self.feasible() {
            return false;
        }
        // Fewest onward options first.
        let mut next: Vec<u32> = self.adj[v as usize]
            .iter()
            .copied()
            .filter(|&w| !self.visited[w as usize])
            .collect();
        next.sort_by_key(|&w| (self.free[w as usize], w));
        for w in next {
            self.visit(w);
            if self.extend() {
                return true;
            }
            self.unvisit();
        }
        false
    }
}

/// A Hamiltonian cycle of `Flip(m)` found by depth-first search from the
/// smallest triangulation, for `5 <= m <= SEARCH_MAX_M`.
pub fn backtrack_flip_cycle(m: usize) -> Result<Vec<Triangulation>> {
    if m > SEARCH_MAX_M {
        return Err(Error::TooLarge {
            n: m,
            limit: SEARCH_MAX_M,
            what: "exhaustive flip-cycle search",
        });
    }
    if m < 5 {
        return Err(Error::TooSmall { n: m, min: 5 });
    }
    let catalog = Catalog::build(m, Execution::Sequential)?;
    let adj: Vec<Vec<u32>> = catalog
        .as_slice()
        .iter()
        .map(|t| {
            let mut row: Vec<u32> = t.flip_neighbors().map(|u| catalog.rank(&u).expect("flip stays in catalog")).collect();
            row.sort_unstable();
            row
        })
        .collect();
    let mut search = Search {
        adj: &adj,
        visited: vec![false; adj.len()],
        free: adj.iter().map(|row| row.len() as u32).collect(),
        path: Vec::with_capacity(adj.len()),
    };
    search.visit(0);
    if !search.extend() {
        return Err(Error::Internal(format!("flip graph of the {m}-gon has no Hamiltonian cycle")));
    }
    Ok(search.path.iter().map(|&r| catalog.get(r)).collect())
}
