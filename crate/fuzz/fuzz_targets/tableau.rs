#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::tableaux::{SkewTableau, Tableau};

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(t) = s.parse::<Tableau>() {
        assert_eq!(t.to_string().parse::<Tableau>().ok(), Some(t.clone()));
        assert_eq!(Tableau::from_json(&t.to_json()).ok(), Some(t));
    }
    let _ = Tableau::from_json(s);
    if let Ok(t) = s.parse::<SkewTableau>() {
        assert_eq!(t.to_string().parse::<SkewTableau>().ok(), Some(t));
    }
});
