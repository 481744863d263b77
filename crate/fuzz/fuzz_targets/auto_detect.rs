#![no_main]

use kfree::graph::format::{read_graph, write_graph6, Format};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(g) = read_graph(data, None) {
        let encoded = write_graph6(&g);
        assert_eq!(read_graph(encoded.as_bytes(), Some(Format::Graph6)).unwrap(), g);
    }
});
