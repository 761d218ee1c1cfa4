#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::base::Word;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(w) = s.parse::<Word>() {
        assert_eq!(w.to_string().parse::<Word>().ok(), Some(w));
    }
});
