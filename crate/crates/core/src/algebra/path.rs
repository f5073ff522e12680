/// An edge generator `e_i` or `e_i*`. `edge` indexes the ambient graph's edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub edge: u32,
    pub index: u32,
    pub star: bool,
}

impl Letter {
    pub fn new(edge: usize, index: u32, star: bool) -> Self {
        Letter {
            edge: edge as u32,
            index,
            star,
        }
    }

    pub fn starred(self) -> Self {
        Letter {
            star: !self.star,
            ..self
        }
    }
}

/// A generalized path: a single vertex, or a nonempty composable word of
/// edge generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Path {
    Vertex(u32),
    Word(Vec<Letter>),
}

impl Path {
    pub fn len(&self) -> usize {
        match self {
            Path::Vertex(_) => 1,
            Path::Word(w) => w.len(),
        }
    }

    /// Generalized paths are never empty; this exists for clippy's sake.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The image under `e_i ↦ e_i*`, `e_i* ↦ e_i`, reversed.
    pub fn adjoint(&self) -> Path {
        match self {
            Path::Vertex(v) => Path::Vertex(*v),
            Path::Word(w) => Path::Word(w.iter().rev().map(|l| l.starred()).collect()),
        }
    }
}

/// Any generator of the free algebra, as it may appear in unreduced input.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    Vertex(u32),
    Letter(Letter),
}

impl From<Letter> for Generator {
    fn from(l: Letter) -> Self {
        Generator::Letter(l)
    }
}
