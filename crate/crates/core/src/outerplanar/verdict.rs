#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    NotOuterplanar,
    Outerplanar,
    MaximalOuterplanar,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::NotOuterplanar => "NOT_OUTERPLANAR",
            Verdict::Outerplanar => "OUTERPLANAR",
            Verdict::MaximalOuterplanar => "MAXIMAL_OUTERPLANAR",
        }
    }

    pub fn is_outerplanar(self) -> bool {
        self != Verdict::NotOuterplanar
    }
}

impl core::fmt::Display for Verdict {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `m ≤ 2n − 3`; for `n ≤ 1` only the edgeless graph passes.
pub fn check_edge_bound(n: usize, m: usize) -> bool {
    if n <= 1 {
        m == 0
    } else {
        m <= 2 * n - 3
    }
}

/// Maximality of a graph already known to be outerplanar.
pub fn is_maximal(n: usize, m: usize) -> bool {
    match n {
        0 => false,
        1 => m == 0,
        2 => m == 1,
        _ => m == 2 * n - 3,
    }
}
