use super::{Graph, GraphError};

pub const MAX_ENUMERATION_VERTICES: usize = 7;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GraphFilter {
    All,
    Chordal,
    GeneralizedBlock,
    Block,
}

impl GraphFilter {
    pub fn accepts(self, g: &Graph) -> bool {
        match self {
            GraphFilter::All => true,
            GraphFilter::Chordal => g.is_chordal(),
            GraphFilter::GeneralizedBlock => g.classify().generalized_block_graph,
            GraphFilter::Block => g.classify().block_graph,
        }
    }
}

/// All connected labelled graphs on `1..=n` accepted by `filter`, in order of
/// their edge bitmask (edges indexed lexicographically).
pub fn enumerate_connected_graphs(
    n: usize,
    filter: GraphFilter,
) -> Result<impl Iterator<Item = Graph>, GraphError> {
    if n > MAX_ENUMERATION_VERTICES {
        return Err(GraphError::EnumerationTooLarge {
            n,
            max: MAX_ENUMERATION_VERTICES,
        });
    }
    if n == 0 {
        return Err(GraphError::Empty);
    }
    let slots: Vec<(usize, usize)> = (1..=n)
        .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
        .collect();
    let total = 1u64 << slots.len();
    Ok((0..total).filter_map(move |mask| {
        // connectivity needs at least n - 1 edges
        if (mask.count_ones() as usize) + 1 < n {
            return None;
        }
        let mut g = Graph::new(n).expect("n checked");
        for (k, &(i, j)) in slots.iter().enumerate() {
            if mask >> k & 1 == 1 {
                g.add_edge(i, j).expect("valid slot");
            }
        }
        (g.is_connected() && filter.accepts(&g)).then_some(g)
    }))
}
