//! Exchange equivalence on tuple spaces, amalgamation, contraction and
//! transport along homomorphisms.

mod amalgam;
mod partition;
mod space;
mod unionfind;

pub use amalgam::{
    build_amalgam, build_amalgam_capped, restriction_compare, transport, transport_check, AmalgamModule, Restriction,
    TransportReport,
};
pub use partition::{basic_exchange_step, exchange_partition, AmVerdict, ExchangePartition, ExchangeStep};
pub use space::{TupleSpace, DEFAULT_TUPLE_CAP};
pub use unionfind::UnionFind;
