//! Tarjan strongly connected components on adjacency-list digraphs.

struct TarjanState {
    index: usize,
    stack: Vec<usize>,
    on_stack: Vec<bool>,
    idx: Vec<Option<usize>>,
    low: Vec<usize>,
    comps: Vec<Vec<usize>>,
}

/// Strongly connected components of a digraph given as out-neighbor lists.
/// Each component is returned with its members sorted ascending.
pub fn tarjan_scc(graph: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = graph.len();
    let mut state = TarjanState {
        index: 0,
        stack: Vec::new(),
        on_stack: vec![false; n],
        idx: vec![None; n],
        low: vec![0; n],
        comps: Vec::new(),
    };

    for v in 0..n {
        if state.idx[v].is_none() {
            strongconnect(v, graph, &mut state);
        }
    }

    for comp in &mut state.comps {
        comp.sort_unstable();
    }
    state.comps
}

fn strongconnect(v: usize, graph: &[Vec<usize>], state: &mut TarjanState) {
    state.idx[v] = Some(state.index);
    state.low[v] = state.index;
    state.index += 1;

    state.stack.push(v);
    state.on_stack[v] = true;

    for &w in &graph[v] {
        if state.idx[w].is_none() {
            strongconnect(w, graph, state);
            state.low[v] = state.low[v].min(state.low[w]);
        } else if state.on_stack[w] {
            state.low[v] = state.low[v].min(state.idx[w].unwrap());
        }
    }

    if state.low[v] == state.idx[v].unwrap() {
        let mut comp = Vec::new();
        loop {
            let w = state.stack.pop().expect("stack underflow");
            state.on_stack[w] = false;
            comp.push(w);
            if w == v {
                break;
            }
        }
        state.comps.push(comp);
    }
}

/// True iff the digraph consists of a single strongly connected component.
pub fn is_strongly_connected(graph: &[Vec<usize>]) -> bool {
    tarjan_scc(graph).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cycle_is_strongly_connected() {
        let g = vec![vec![1], vec![2], vec![0]];
        assert!(is_strongly_connected(&g));
    }

    #[test]
    fn chain_splits_into_singletons() {
        let g = vec![vec![1], vec![2], vec![]];
        let comps = tarjan_scc(&g);
        assert_eq!(comps.len(), 3);
        assert!(comps.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn two_cycles_bridge() {
        // 0 <-> 1, 2 <-> 3, arc 1 -> 2
        let g = vec![vec![1], vec![0, 2], vec![3], vec![2]];
        let mut comps = tarjan_scc(&g);
        comps.sort();
        assert_eq!(comps, vec![vec![0, 1], vec![2, 3]]);
    }
}
