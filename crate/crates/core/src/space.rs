use core::fmt;

/// One of the three elliptic model spaces.
///
/// Each space is the Clifford algebra of a model vector space with every basis
/// vector squaring to `+1`: two basis vectors for the elliptic line, three for
/// the elliptic plane and four for elliptic 3-space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Space {
    El1,
    El2,
    El3,
}

impl Space {
    pub const ALL: [Space; 3] = [Space::El1, Space::El2, Space::El3];

    /// Dimension of the model vector space.
    pub const fn dim(self) -> usize {
        match self {
            Space::El1 => 2,
            Space::El2 => 3,
            Space::El3 => 4,
        }
    }

    /// Number of basis blades, `2^dim`.
    pub const fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Canonical index of the pseudoscalar.
    pub const fn pseudoscalar_index(self) -> usize {
        self.blade_count() - 1
    }

    /// Sign of `I * I`: `-1` on the line and the plane, `+1` in 3-space.
    pub const fn pseudoscalar_square(self) -> f64 {
        match self {
            Space::El1 | Space::El2 => -1.0,
            Space::El3 => 1.0,
        }
    }

    /// Grade of the blades that represent points.
    pub const fn point_grade(self) -> u32 {
        self.dim() as u32 - 1
    }

    pub const fn name(self) -> &'static str {
        match self {
            Space::El1 => "el1",
            Space::El2 => "el2",
            Space::El3 => "el3",
        }
    }

    pub fn from_name(name: &str) -> Option<Space> {
        Space::ALL.into_iter().find(|s| s.name() == name)
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
