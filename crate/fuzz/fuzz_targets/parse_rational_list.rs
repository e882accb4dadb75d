#![no_main]

use libfuzzer_sys::fuzz_target;

use cparts::exact::{parse_rat_list, rat_render};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(values) = parse_rat_list(text) {
        // re-rendering the accepted list and re-parsing is the identity
        let rendered = values.iter().map(rat_render).collect::<Vec<_>>().join(",");
        if !values.is_empty() {
            assert_eq!(
                parse_rat_list(&rendered).expect("canonical list parses"),
                values
            );
        }
    }
});
