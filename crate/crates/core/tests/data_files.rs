//! The files under `data/` are the serialized forms of the built-in meshes
//! and catalog algebras. Set `GDERHAM_BLESS=1` to regenerate them.

use std::path::PathBuf;

use gderham_core::liealg::{catalog, catalog_names, load_lie, LieFile};
use gderham_core::models::{bundled_mesh, bundled_mesh_names, load_mesh, MeshFile};

fn data_dir(sub: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data").join(sub)
}

fn check_or_bless(path: PathBuf, expected: String) {
    if std::env::var_os("GDERHAM_BLESS").is_some() {
        std::fs::write(&path, &expected).unwrap();
        return;
    }
    let found = std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(found, expected, "{} is stale", path.display());
}

fn file_name(name: &str) -> String {
    format!("{}.json", name.replace([':', '+'], "_"))
}

#[test]
fn mesh_files_match_builtins() {
    for name in bundled_mesh_names() {
        let k = bundled_mesh(name).unwrap();
        let path = data_dir("meshes").join(file_name(name));
        check_or_bless(path.clone(), MeshFile::from_complex(&k).to_json());
        let loaded = load_mesh(path.to_str().unwrap()).unwrap();
        assert!(loaded.same_simplices(&k), "{name}");
        assert_eq!(loaded.orientation(), k.orientation(), "{name}");
    }
}

#[test]
fn lie_files_match_catalog() {
    for name in catalog_names() {
        let l = catalog(&name).unwrap();
        let path = data_dir("lie").join(file_name(&name));
        check_or_bless(path.clone(), LieFile::from_algebra(&l).to_json());
        let loaded = load_lie(path.to_str().unwrap()).unwrap();
        assert_eq!(loaded.with_name(l.name()), l, "{name}");
    }
}

#[test]
fn files_reserialize_identically() {
    for dir in ["meshes", "lie"] {
        for entry in std::fs::read_dir(data_dir(dir)).unwrap() {
            let path = entry.unwrap().path();
            let text = std::fs::read_to_string(&path).unwrap();
            let again = if dir == "meshes" {
                MeshFile::from_complex(&MeshFile::parse(&text).unwrap().into_complex().unwrap()).to_json()
            } else {
                LieFile::from_algebra(&LieFile::parse(&text).unwrap().into_algebra("x").unwrap()).to_json()
            };
            assert_eq!(again, text, "{}", path.display());
        }
    }
}
