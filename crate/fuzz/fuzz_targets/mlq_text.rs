#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::mlq::MultilineQueue;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = s.parse::<MultilineQueue>() {
        assert_eq!(m.to_string().parse::<MultilineQueue>().ok(), Some(m));
    }
});
