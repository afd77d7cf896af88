use exactnum::Scalar;
use multilinear::KForm;

/// `Ok` when `f` vanishes, otherwise its first nonzero component.
pub(crate) fn vanishes(f: &KForm<Scalar>, name: &str) -> Result<(), String> {
    match f.indexed_terms().next() {
        None => Ok(()),
        Some((idx, c)) => {
            let names: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
            Err(format!("{name} has component {c} on ({})", names.join(", ")))
        }
    }
}

pub(crate) fn describe(f: &KForm<Scalar>) -> String {
    if f.is_zero() {
        return "0".into();
    }
    f.indexed_terms()
        .map(|(idx, c)| {
            let names: Vec<String> = idx.iter().map(|i| format!("e{i}")).collect();
            format!("{c} {}", names.join("^"))
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub(crate) fn vector(v: &[Scalar]) -> String {
    format!("({})", v.iter().map(Scalar::to_string).collect::<Vec<_>>().join(", "))
}
