#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::base::Composition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(c) = s.parse::<Composition>() {
        assert_eq!(c.to_string().parse::<Composition>().ok(), Some(c));
    }
});
