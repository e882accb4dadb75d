#![no_main]

use libfuzzer_sys::fuzz_target;

use cparts::output::{parse_table_csv, render_table, OutputFormat};

// Accepted tables must re-render to the exact bytes that parse to the same
// cells again; the byte-stable round trip is part of the CLI contract.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cells) = parse_table_csv(text) {
        let rendered = render_table(&cells, OutputFormat::Csv);
        let reparsed = parse_table_csv(&rendered).expect("rendered table parses");
        assert_eq!(reparsed, cells);
        assert_eq!(render_table(&reparsed, OutputFormat::Csv), rendered);
    }
});
