#![no_main]

use libfuzzer_sys::fuzz_target;

use cparts::exact::{parse_rat, rat_render};

// The rational parser must never panic, and anything it accepts must
// round-trip through the canonical text form.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(value) = parse_rat(text) {
        let rendered = rat_render(&value);
        let reparsed = parse_rat(&rendered).expect("canonical form parses");
        assert_eq!(reparsed, value);
        assert_eq!(rat_render(&reparsed), rendered);
    }
});
