#![no_main]
use libfuzzer_sys::fuzz_target;
use mlqkit::poly::QXPolynomial;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(p) = s.parse::<QXPolynomial>() {
        let back = QXPolynomial::parse_with_n(&p.to_string(), p.n()).ok();
        assert_eq!(back, Some(p.clone()));
        assert_eq!(QXPolynomial::from_json(&p.to_json()).ok(), Some(p));
    }
    let _ = QXPolynomial::from_json(s);
});
