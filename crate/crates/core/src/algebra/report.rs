use serde::{Deserialize, Serialize};

/// One violated axiom with its lexicographically least witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub axiom: String,
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Deserialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn get(&self, axiom: &str) -> Option<&Violation> {
        self.violations.iter().find(|v| v.axiom == axiom)
    }

    pub(crate) fn push(&mut self, axiom: &str, witness: Vec<usize>) {
        self.violations.push(Violation { axiom: axiom.to_string(), witness });
    }

    pub(crate) fn first1(&mut self, n: usize, axiom: &str, ok: impl Fn(usize) -> bool) {
        if let Some(a) = (0..n).find(|&a| !ok(a)) {
            self.push(axiom, vec![a]);
        }
    }

    pub(crate) fn first2(&mut self, n: usize, axiom: &str, ok: impl Fn(usize, usize) -> bool) {
        for a in 0..n {
            for b in 0..n {
                if !ok(a, b) {
                    self.push(axiom, vec![a, b]);
                    return;
                }
            }
        }
    }

    pub(crate) fn first3(&mut self, n: usize, axiom: &str, ok: impl Fn(usize, usize, usize) -> bool) {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !ok(a, b, c) {
                        self.push(axiom, vec![a, b, c]);
                        return;
                    }
                }
            }
        }
    }
}

impl Serialize for ValidationReport {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ValidationReport", 2)?;
        st.serialize_field("ok", &self.ok())?;
        st.serialize_field("violations", &self.violations)?;
        st.end()
    }
}
