#![no_main]

use libfuzzer_sys::fuzz_target;

use cparts::output::{parse_table_json_lines, render_table, OutputFormat};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cells) = parse_table_json_lines(text) {
        let rendered = render_table(&cells, OutputFormat::JsonLines);
        let reparsed = parse_table_json_lines(&rendered).expect("rendered table parses");
        assert_eq!(reparsed, cells);
        assert_eq!(render_table(&reparsed, OutputFormat::JsonLines), rendered);
    }
});
