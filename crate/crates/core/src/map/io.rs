//! JSON map files.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Flag, FlagMap, MapError};

/// On-disk form of a map: `{"flags", "s0", "s1", "s2", "marks"}` with 0-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapFile {
    pub flags: usize,
    pub s0: Vec<Flag>,
    pub s1: Vec<Flag>,
    pub s2: Vec<Flag>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub marks: BTreeMap<String, Flag>,
}

#[derive(Debug, thiserror::Error)]
pub enum MapFileError {
    #[error("malformed map JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("`flags` is {declared} but the involutions have length {actual}")]
    FlagCount { declared: usize, actual: usize },
    #[error(transparent)]
    Invalid(#[from] MapError),
}

impl From<&FlagMap> for MapFile {
    fn from(m: &FlagMap) -> Self {
        MapFile {
            flags: m.flag_count(),
            s0: m.s0_slice().to_vec(),
            s1: m.s1_slice().to_vec(),
            s2: m.s2_slice().to_vec(),
            marks: m.marks().clone(),
        }
    }
}

impl MapFile {
    pub fn into_map(self) -> Result<FlagMap, MapFileError> {
        for arr in [&self.s0, &self.s1, &self.s2] {
            if arr.len() != self.flags {
                return Err(MapFileError::FlagCount {
                    declared: self.flags,
                    actual: arr.len(),
                });
            }
        }
        Ok(FlagMap::with_marks(self.s0, self.s1, self.s2, self.marks)?)
    }
}

impl FlagMap {
    fn s0_slice(&self) -> &[Flag] {
        self.involution(super::Involution::S0)
    }

    fn s1_slice(&self) -> &[Flag] {
        self.involution(super::Involution::S1)
    }

    fn s2_slice(&self) -> &[Flag] {
        self.involution(super::Involution::S2)
    }

    /// Compact single-line JSON followed by a newline.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string(&MapFile::from(self)).expect("map serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<FlagMap, MapFileError> {
        let file: MapFile = serde_json::from_str(text)?;
        file.into_map()
    }
}

#[cfg(test)]
mod tests {
    use super::super::*;

    #[test]
    fn round_trip_identity() {
        for m in [cube_map(), k6_projective_map()] {
            let back = FlagMap::from_json(&m.to_json()).unwrap();
            assert_eq!(back, m);
        }
    }

    #[test]
    fn rejects_invalid() {
        let text = r#"{"flags":2,"s0":[1,0],"s1":[1,0],"s2":[0,1]}"#;
        assert!(matches!(
            FlagMap::from_json(text),
            Err(super::MapFileError::Invalid(MapError::FixedPointFlag { .. }))
        ));
        let text = r#"{"flags":3,"s0":[1,0],"s1":[1,0],"s2":[1,0]}"#;
        assert!(matches!(
            FlagMap::from_json(text),
            Err(super::MapFileError::FlagCount { .. })
        ));
    }
}
