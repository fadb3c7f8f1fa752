//! The family-file format and exact rational interchange.

use std::fmt;

use frobenius_masa::exact::{format_rat, parse_rat, Rat};
use frobenius_masa::matrix::Mat;
use num_traits::ToPrimitive;
use serde::de::{self, SeqAccess, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// A rational written as a JSON integer or a `"p/q"` string.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonRat(pub Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_integer() {
            if let Some(v) = self.0.numer().to_i64() {
                return s.serialize_i64(v);
            }
        }
        s.serialize_str(&format_rat(&self.0))
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl Visitor<'_> for V {
            type Value = JsonRat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an integer or a string of the form -?[0-9]+(/[1-9][0-9]*)?")
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> Result<JsonRat, E> {
                Ok(JsonRat(Rat::from_integer(v.into())))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> Result<JsonRat, E> {
                Ok(JsonRat(Rat::from_integer(v.into())))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> Result<JsonRat, E> {
                parse_rat(v).map(JsonRat).ok_or_else(|| E::custom(format!("bad rational {v:?}")))
            }
        }
        d.deserialize_any(V)
    }
}

/// A square matrix as an array of equally long row arrays.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JsonMat(pub Mat);

impl Serialize for JsonMat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<JsonRat>> =
            (0..self.0.rows()).map(|i| self.0.row(i).iter().cloned().map(JsonRat).collect()).collect();
        rows.serialize(s)
    }
}

impl<'de> Deserialize<'de> for JsonMat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = JsonMat;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a square matrix given as an array of rows")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<JsonMat, A::Error> {
                let mut rows: Vec<Vec<Rat>> = Vec::new();
                while let Some(row) = seq.next_element::<Vec<JsonRat>>()? {
                    if let Some(first) = rows.first() {
                        if first.len() != row.len() {
                            return Err(de::Error::custom(format!(
                                "row {} has {} entries, row 1 has {}",
                                rows.len() + 1,
                                row.len(),
                                first.len()
                            )));
                        }
                    }
                    rows.push(row.into_iter().map(|r| r.0).collect());
                }
                if rows.is_empty() {
                    return Err(de::Error::custom("empty matrix"));
                }
                if rows.len() != rows[0].len() {
                    return Err(de::Error::custom(format!("matrix is {}x{}, not square", rows.len(), rows[0].len())));
                }
                Ok(JsonMat(Mat::from_rows(rows).map_err(de::Error::custom)?))
            }
        }
        d.deserialize_seq(V)
    }
}

/// Input file. Every matrix is `n x n`; `alpha` is a covector on `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyFile {
    pub n: usize,
    pub generators: Vec<JsonMat>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<JsonMat>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<Vec<JsonRat>>,
}

/// Parse failure with the position serde_json reports.
#[derive(Debug)]
pub struct InputError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
        }
    }
}

fn plain(message: String) -> InputError {
    InputError { line: 0, column: 0, message }
}

impl FamilyFile {
    pub fn parse(text: &str) -> Result<FamilyFile, InputError> {
        let f: FamilyFile = serde_json::from_str(text).map_err(|e| {
            let message = e.to_string();
            let message = match message.rfind(" at line ") {
                Some(i) => message[..i].to_string(),
                None => message,
            };
            InputError { line: e.line(), column: e.column(), message }
        })?;
        f.check_sizes()?;
        Ok(f)
    }

    fn check_sizes(&self) -> Result<(), InputError> {
        if self.n == 0 {
            return Err(plain("n must be positive".into()));
        }
        let lists = [("generators", Some(&self.generators)), ("basis", self.basis.as_ref())];
        for (key, list) in lists {
            for (i, m) in list.into_iter().flatten().enumerate() {
                if m.0.rows() != self.n {
                    return Err(plain(format!("{key}[{i}] is {0}x{0} but n = {1}", m.0.rows(), self.n)));
                }
            }
        }
        if let Some(a) = &self.alpha {
            if a.len() != self.n {
                return Err(plain(format!("alpha has {} entries but n = {}", a.len(), self.n)));
            }
        }
        Ok(())
    }

    pub fn generators(&self) -> Vec<Mat> {
        self.generators.iter().map(|m| m.0.clone()).collect()
    }

    pub fn basis(&self) -> Option<Vec<Mat>> {
        self.basis.as_ref().map(|b| b.iter().map(|m| m.0.clone()).collect())
    }

    pub fn alpha(&self) -> Option<Vec<Rat>> {
        self.alpha.as_ref().map(|a| a.iter().map(|r| r.0.clone()).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use frobenius_masa::exact::frac;

    #[test]
    fn parses_rationals() {
        let f = FamilyFile::parse(r#"{"n": 2, "generators": [[[1, "-1/2"], [0, "3"]]]}"#).unwrap();
        assert_eq!(f.generators[0].0.get(0, 1), &frac(-1, 2));
        let back = serde_json::to_string(&f).unwrap();
        assert_eq!(back, r#"{"n":2,"generators":[[[1,"-1/2"],[0,3]]]}"#);
        assert_eq!(FamilyFile::parse(&back).unwrap(), f);
    }

    #[test]
    fn errors_carry_position() {
        let text = "{\"n\": 2,\n \"generators\": [[[1, 0],\n [0, \"1/0\"]]]}";
        let e = FamilyFile::parse(text).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("bad rational"), "{e}");
        let e = FamilyFile::parse("{\"n\": 2,\n \"generators\": [[[1, 0]]]}").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("not square"), "{e}");
        let e = FamilyFile::parse("{\"n\": 2, \"generators\": [[[1, 0], [0]]]}").unwrap_err();
        assert!(e.message.contains("row 2"), "{e}");
        let e = FamilyFile::parse("{\"n\": 3, \"generators\": [[[1]]]}").unwrap_err();
        assert!(e.message.contains("n = 3"), "{e}");
        assert!(FamilyFile::parse("{\"n\": 1, \"generators\": [[[1.5]]]}").is_err());
        assert!(FamilyFile::parse("{\"n\": 1, \"generators\": [[[\"+1\"]]]}").is_err());
    }
}
