#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::base::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<Partition>() {
        assert_eq!(p.to_string().parse::<Partition>().ok(), Some(p));
    }
});
