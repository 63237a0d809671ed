pub mod bitset;
pub mod certificate;
pub mod cli;
pub mod coloring;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod kempe;
pub mod named;
pub mod oracle;
pub mod sweep;
pub mod witness;
