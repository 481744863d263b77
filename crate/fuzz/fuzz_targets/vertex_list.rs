#![no_main]

use kfree::graph::format::{parse_vertex_list, write_vertex_list};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(vs) = parse_vertex_list(text) {
        assert_eq!(parse_vertex_list(&write_vertex_list(&vs)).unwrap(), vs);
    }
});
