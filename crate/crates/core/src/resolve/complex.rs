use super::field::Field;

/// Squarefree divisor complex: subsets `F` of the vertices with
/// `b - Σ_{i∈F} a_i` in the semigroup, stored as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisorComplex {
    vertex_count: usize,
    faces: Vec<u32>,
}

impl DivisorComplex {
    /// `is_face(mask)` decides membership of the residual degree.
    pub fn new(vertex_count: usize, is_face: impl Fn(u32) -> bool) -> Self {
        assert!(vertex_count < 32, "too many vertices");
        let faces = (0..1u32 << vertex_count).filter(|&m| is_face(m)).collect();
        let complex = Self {
            vertex_count,
            faces,
        };
        debug_assert!(complex.is_downward_closed());
        complex
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn faces(&self) -> &[u32] {
        &self.faces
    }

    pub fn is_void(&self) -> bool {
        self.faces.first() != Some(&0)
    }

    fn contains(&self, mask: u32) -> bool {
        self.faces.binary_search(&mask).is_ok()
    }

    pub fn is_downward_closed(&self) -> bool {
        self.faces.iter().all(|&f| {
            (0..self.vertex_count).all(|v| f & (1 << v) == 0 || self.contains(f & !(1 << v)))
        })
    }

    /// A vertex joinable to every face makes the complex a cone, hence acyclic.
    pub fn is_cone(&self) -> bool {
        (0..self.vertex_count).any(|v| self.faces.iter().all(|&f| self.contains(f | (1 << v))))
    }

    /// `dim H̃_k` for `k = -1, 0, ..., max face dimension`, as index `k + 1`.
    pub fn reduced_homology_ranks(&self, field: Field) -> Vec<u64> {
        if self.is_void() {
            return Vec::new();
        }
        let top = self.faces.iter().map(|f| f.count_ones()).max().unwrap_or(0) as usize;
        // by_size[s] holds faces with s vertices, i.e. dimension s - 1.
        let mut by_size: Vec<Vec<u32>> = vec![Vec::new(); top + 1];
        for &f in &self.faces {
            by_size[f.count_ones() as usize].push(f);
        }
        if self.is_cone() {
            return vec![0; top + 1];
        }
        // rank of the boundary map from faces with s vertices to s - 1 vertices.
        let mut boundary_rank = vec![0usize; top + 2];
        for s in 1..=top {
            let rows = &by_size[s - 1];
            let cols = &by_size[s];
            if rows.is_empty() || cols.is_empty() {
                continue;
            }
            let matrix: Vec<Vec<i64>> = rows
                .iter()
                .map(|&r| {
                    cols.iter()
                        .map(|&c| {
                            if c & r != r {
                                return 0;
                            }
                            let removed = c & !r;
                            let position = (c & (removed - 1)).count_ones();
                            if position % 2 == 0 {
                                1
                            } else {
                                -1
                            }
                        })
                        .collect()
                })
                .collect();
            boundary_rank[s] = field.rank(&matrix);
        }
        (0..=top)
            .map(|s| (by_size[s].len() - boundary_rank[s] - boundary_rank[s + 1]) as u64)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(n: usize, facets: &[u32]) -> DivisorComplex {
        DivisorComplex::new(n, |m| facets.iter().any(|&f| m & f == m))
    }

    #[test]
    fn simplex_is_acyclic() {
        let c = complex(3, &[0b111]);
        assert!(c.is_cone());
        assert_eq!(c.reduced_homology_ranks(Field::default()), vec![0, 0, 0, 0]);
    }

    #[test]
    fn two_points() {
        let c = complex(2, &[0b01, 0b10]);
        assert_eq!(c.reduced_homology_ranks(Field::default()), vec![0, 1]);
        assert_eq!(c.reduced_homology_ranks(Field::Rational), vec![0, 1]);
    }

    #[test]
    fn hollow_triangle() {
        let c = complex(3, &[0b011, 0b110, 0b101]);
        assert_eq!(c.reduced_homology_ranks(Field::default()), vec![0, 0, 1]);
    }

    #[test]
    fn empty_face_only() {
        let c = complex(3, &[0]);
        assert_eq!(c.reduced_homology_ranks(Field::default()), vec![1]);
        let void = DivisorComplex::new(2, |_| false);
        assert!(void.is_void());
        assert!(void.reduced_homology_ranks(Field::default()).is_empty());
    }
}
