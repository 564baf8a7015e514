//! Words over `Z_q` and the symbol maps between `Z4` and `Z2^2`.

mod maps;
mod word;

pub use maps::{
    enumerate_all_maps, naisargik, naisargik_registry, phi8_symbol_from_bits, phi9_bits_from_symbol,
    phi9_symbol_from_bits, symbol_map, BitPair, SymbolMap,
};
pub use word::Word;
