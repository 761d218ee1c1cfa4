#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::mlq::MultilineQueue;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = MultilineQueue::from_json(s) {
        assert_eq!(MultilineQueue::from_json(&m.to_json()).ok(), Some(m));
    }
});
