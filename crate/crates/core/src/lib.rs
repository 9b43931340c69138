//! Exact character tables and basic-set verification for symmetric groups,
//! alternating groups and the wreath products `(Z_p ⋊ Z_{p-1}) ≀ S_w`.

pub mod altchar;
pub mod basicsets;
pub mod decomp;
pub mod error;
pub mod exactnum;
pub mod intlinalg;
pub mod partitions;
pub mod symchar;
pub mod wreath;

pub use error::{Error, Result};
pub use exactnum::{AlgValue, Cyclotomic, QuadValue, Rational};
pub use intlinalg::{IntMatrix, RatMatrix};
pub use partitions::{MultiPartition, Partition};
pub use symchar::{BlockDescriptor, SymCharTable, SymClass};

use std::io;

pub(crate) fn serde_bigint<S: serde::Serializer>(
    v: &num_bigint::BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

pub(crate) fn serde_bigint_vec<S: serde::Serializer>(
    v: &[num_bigint::BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|x| x.to_string()))
}

pub(crate) fn serde_rational<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(&exactnum::format_rational(v))
}

pub(crate) fn serde_rational_vec<S: serde::Serializer>(
    v: &[Rational],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(exactnum::format_rational))
}

pub(crate) fn serde_rational_grid<S: serde::Serializer>(
    v: &[Vec<Rational>],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(|r| r.iter().map(exactnum::format_rational).collect::<Vec<_>>()))
}

pub(crate) fn write_table_csv<W: io::Write>(
    out: W,
    header: impl Iterator<Item = String>,
    rows: impl Iterator<Item = (String, Vec<String>)>,
) -> Result<()> {
    let io_err = |e: csv::Error| Error::Internal(format!("csv: {e}"));
    let mut w = csv::Writer::from_writer(out);
    let mut head = vec![String::new()];
    head.extend(header);
    w.write_record(&head).map_err(io_err)?;
    for (label, values) in rows {
        let mut rec = vec![label];
        rec.extend(values);
        w.write_record(&rec).map_err(io_err)?;
    }
    w.flush().map_err(|e| Error::Internal(format!("csv: {e}")))?;
    Ok(())
}
