use super::{Algebra, Letter, Path};

impl Algebra {
    /// Letters `x` with `s(x) = v`.
    pub(crate) fn letters_from(&self, v: u32) -> Vec<Letter> {
        let mut out = Vec::new();
        for &e in self.graph.out_edges(v as usize) {
            for i in 1..=self.edge_weight(e as u32) {
                out.push(Letter::new(e, i, false));
            }
        }
        for &e in self.graph.in_edges(v as usize) {
            for i in 1..=self.edge_weight(e as u32) {
                out.push(Letter::new(e, i, true));
            }
        }
        out
    }

    /// All normal generalized paths of length at most `max_len`: every vertex,
    /// then every composable word avoiding the forbidden factors, in
    /// canonical order.
    pub fn enumerate_normal_paths(&self, max_len: usize) -> Vec<Path> {
        let n = self.graph.vertex_count() as u32;
        let mut out: Vec<Path> = (0..n).map(Path::Vertex).collect();
        let next: Vec<Vec<Letter>> = (0..n).map(|v| self.letters_from(v)).collect();
        let mut stack: Vec<Vec<Letter>> = next.iter().flatten().map(|&l| vec![l]).collect();
        if max_len == 0 {
            stack.clear();
        }
        while let Some(word) = stack.pop() {
            let last = *word.last().expect("nonempty");
            if word.len() < max_len {
                for &l in &next[self.letter_dst(last) as usize] {
                    if !self.is_forbidden(last, l) {
                        let mut longer = word.clone();
                        longer.push(l);
                        stack.push(longer);
                    }
                }
            }
            out.push(Path::Word(word));
        }
        out.sort_by(|a, b| self.canonical_cmp(a, b));
        out
    }

    /// Number of normal paths of each length `0..=max_len`, counting vertices
    /// as length 0.
    pub fn normal_path_counts(&self, max_len: usize) -> Vec<usize> {
        let mut counts = vec![0; max_len + 1];
        for p in self.enumerate_normal_paths(max_len) {
            match p {
                Path::Vertex(_) => counts[0] += 1,
                Path::Word(w) => counts[w.len()] += 1,
            }
        }
        counts
    }
}
