#![no_main]

use kfree::graph::format::{parse_graph6, write_graph6};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = parse_graph6(data) {
        let body = data.strip_prefix(b">>graph6<<").unwrap_or(data);
        assert_eq!(write_graph6(&g).as_bytes(), body);
    }
});
