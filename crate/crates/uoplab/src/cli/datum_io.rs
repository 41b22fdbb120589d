//! Loading custom root data and resolving `--group`.

use std::fs;
use std::path::Path;

use crate::error::{Error, Result};
use crate::rootdata::{preset, DatumSpec, RootDatum, PRESET_NAMES};

/// Reads a root datum from a JSON file
/// `{name, rank, simple_roots, positive_roots, positive_coroots}`.
pub fn load_root_datum(path: impl AsRef<Path>) -> Result<RootDatum> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)
        .map_err(|e| Error::ParseError(format!("{}: {e}", path.display())))?;
    let spec: DatumSpec = serde_json::from_str(&text)
        .map_err(|e| Error::ParseError(format!("{}: {e}", path.display())))?;
    RootDatum::from_spec(&spec).map_err(|e| match e {
        Error::InvalidDatum(_) | Error::NotFiniteType { .. } => e,
        other => Error::InvalidDatum(other.to_string()),
    })
}

/// Writes a datum in the format read by [`load_root_datum`].
pub fn save_root_datum(d: &RootDatum, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let text = serde_json::to_string_pretty(&d.to_spec()).expect("datum spec serializes");
    fs::write(path, text).map_err(|e| Error::ConfigError(format!("{}: {e}", path.display())))
}

/// A preset label, or otherwise a path to a custom datum file.
pub fn resolve_group(group: &str) -> Result<RootDatum> {
    if PRESET_NAMES.contains(&group) {
        return preset(group);
    }
    if Path::new(group).exists() {
        return load_root_datum(group);
    }
    Err(Error::ConfigError(format!(
        "unknown group {group:?}: expected one of {} or a path to a datum file",
        PRESET_NAMES.join(", ")
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_errors() {
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("gl3.json");
        let gl3 = preset("gl3").unwrap();
        save_root_datum(&gl3, &p).unwrap();
        let back = load_root_datum(&p).unwrap();
        assert_eq!(back.to_spec(), gl3.to_spec());
        assert_eq!(back.two_rho(), gl3.two_rho());

        let sp4 = dir.path().join("sp4.json");
        save_root_datum(&preset("sp4").unwrap(), &sp4).unwrap();
        assert_eq!(
            resolve_group(sp4.to_str().unwrap()).unwrap().weyl().order(),
            8
        );

        let bad = dir.path().join("bad.json");
        fs::write(
            &bad,
            r#"{"name":"bad","rank":2,"simple_roots":[[1,-1]],"positive_roots":[[1,-1]],"positive_coroots":[[3,0]]}"#,
        )
        .unwrap();
        assert!(matches!(load_root_datum(&bad), Err(Error::InvalidDatum(_))));
        fs::write(&bad, "{").unwrap();
        assert!(matches!(load_root_datum(&bad), Err(Error::ParseError(_))));
        assert!(matches!(
            load_root_datum(dir.path().join("missing")),
            Err(Error::ParseError(_))
        ));
        assert!(matches!(resolve_group("e8"), Err(Error::ConfigError(_))));
    }
}
