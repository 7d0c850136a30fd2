//! Recursive-descent parser for the term language.
//!
//! ```text
//! term := NAME | "top"
//!       | "otimes(" term "," term ")"
//!       | "oplus(" RATIONAL "," term "," term ")"
//!       | "sharp(" term ")" | "flat(" term ")" | "sigma(" term ")"
//!       | "pow(" term "," INT ")"
//!       | "kst(" term "," RATIONAL "," RATIONAL ")"
//! ```

use super::term::AlgebraTerm;
use crate::error::{Error, Result};
use crate::rational::{parse_rational, Rational};

pub fn parse_term(text: &str) -> Result<AlgebraTerm> {
    let mut p = Parser { text, pos: 0 };
    let term = p.term()?;
    p.skip_ws();
    if p.pos < text.len() {
        return Err(p.error("end of input"));
    }
    Ok(term)
}

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn error(&self, expected: &str) -> Error {
        let found = match self.rest().chars().next() {
            None => "end of input".to_string(),
            Some(_) => {
                let token: String = self
                    .rest()
                    .chars()
                    .take_while(|c| !c.is_whitespace())
                    .take(12)
                    .collect();
                format!("'{token}'")
            }
        };
        Error::Parse {
            position: self.pos,
            expected: expected.to_string(),
            found,
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        self.skip_ws();
        if self.rest().starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn ident(&mut self) -> Option<&str> {
        self.skip_ws();
        let start = self.pos;
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_ascii_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let len = chars
            .find(|&(_, c)| !(c.is_ascii_alphanumeric() || c == '_' || c == '\''))
            .map_or(rest.len(), |(i, _)| i);
        self.pos += len;
        Some(&self.text[start..start + len])
    }

    /// An optionally signed run of digits.
    fn number_token(&mut self) -> &str {
        self.skip_ws();
        let start = self.pos;
        let sign = usize::from(self.rest().starts_with(['-', '+']));
        let digits = self.rest()[sign..]
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len() - sign);
        self.pos += sign + digits;
        &self.text[start..self.pos]
    }

    /// `p/q` or an integer; whitespace may surround the slash.
    fn rational(&mut self) -> Result<Rational> {
        self.skip_ws();
        let start = self.pos;
        let mut token = self.number_token().to_string();
        let before_slash = self.pos;
        self.skip_ws();
        if self.rest().starts_with('/') {
            self.pos += 1;
            token.push('/');
            token.push_str(self.number_token());
        } else {
            self.pos = before_slash;
        }
        parse_rational(&token).map_err(|_| {
            self.pos = start;
            self.error("rational (p/q or integer)")
        })
    }

    fn integer(&mut self) -> Result<u32> {
        let start = self.pos;
        let token = self.number_token().to_string();
        match token.parse::<u32>() {
            Ok(n) if n >= 1 => Ok(n),
            _ => {
                self.pos = start;
                self.skip_ws();
                Err(self.error("positive integer"))
            }
        }
    }

    fn term(&mut self) -> Result<AlgebraTerm> {
        self.skip_ws();
        let start = self.pos;
        let Some(word) = self.ident().map(str::to_string) else {
            return Err(self.error("term"));
        };
        let is_call = {
            self.skip_ws();
            self.rest().starts_with('(')
        };
        let unary = |p: &mut Self, build: fn(AlgebraTerm) -> AlgebraTerm| -> Result<AlgebraTerm> {
            p.expect('(')?;
            let inner = p.term()?;
            p.expect(')')?;
            Ok(build(inner))
        };
        match word.as_str() {
            "top" if !is_call => Ok(AlgebraTerm::Top),
            "otimes" => {
                self.expect('(')?;
                let f = self.term()?;
                self.expect(',')?;
                let g = self.term()?;
                self.expect(')')?;
                Ok(AlgebraTerm::product(f, g))
            }
            "oplus" => {
                self.expect('(')?;
                let alpha = self.rational()?;
                self.expect(',')?;
                let f = self.term()?;
                self.expect(',')?;
                let g = self.term()?;
                self.expect(')')?;
                Ok(AlgebraTerm::alpha_sum(alpha, f, g))
            }
            "sharp" => unary(self, AlgebraTerm::sharp),
            "flat" => unary(self, AlgebraTerm::flat),
            "sigma" => unary(self, AlgebraTerm::sigma),
            "pow" => {
                self.expect('(')?;
                let f = self.term()?;
                self.expect(',')?;
                let n = self.integer()?;
                self.expect(')')?;
                Ok(AlgebraTerm::power(f, n))
            }
            "kst" => {
                self.expect('(')?;
                let f = self.term()?;
                self.expect(',')?;
                let s = self.rational()?;
                self.expect(',')?;
                let t = self.rational()?;
                self.expect(')')?;
                Ok(AlgebraTerm::kst(f, s, t))
            }
            _ if is_call => {
                self.pos = start;
                Err(self.error("operator (otimes, oplus, sharp, flat, sigma, pow, kst)"))
            }
            _ => Ok(AlgebraTerm::Base(word)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn round_trips_through_display() {
        for text in [
            "k0",
            "top",
            "otimes(k0, top)",
            "oplus(1/2, sharp(k0), flat(k0))",
            "sigma(pow(f, 3))",
            "kst(k0, 1/4, 3/4)",
        ] {
            let t = parse_term(text).unwrap();
            assert_eq!(t.to_string(), text);
            assert_eq!(parse_term(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn whitespace_is_insignificant() {
        let a = parse_term("oplus( 1 / 3 ,f,g )").unwrap();
        let b = parse_term("  oplus(1/3 ,\n f ,\tg)  ").unwrap();
        assert_eq!(a, b);
        assert_eq!(
            b,
            AlgebraTerm::alpha_sum(ratio(1, 3), AlgebraTerm::base("f"), AlgebraTerm::base("g"))
        );
    }

    #[test]
    fn alpha_outside_unit_interval_parses_but_is_rejected_at_evaluation() {
        assert!(parse_term("oplus(3/2, f, g)").is_ok());
    }

    #[test]
    fn errors_report_position_and_expectation() {
        match parse_term("otimes(k0 k1)") {
            Err(Error::Parse {
                position, expected, ..
            }) => {
                assert_eq!(position, 10);
                assert_eq!(expected, "','");
            }
            other => panic!("{other:?}"),
        }
        match parse_term("pow(k0, 0x)") {
            Err(Error::Parse {
                position, expected, ..
            }) => {
                assert_eq!(position, 8);
                assert_eq!(expected, "positive integer");
            }
            other => panic!("{other:?}"),
        }
        match parse_term("frob(k0)") {
            Err(Error::Parse {
                position: 0,
                expected,
                ..
            }) => assert!(expected.starts_with("operator")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_term(""),
            Err(Error::Parse { position: 0, .. })
        ));
        assert!(matches!(
            parse_term("k0 )"),
            Err(Error::Parse { position: 3, .. })
        ));
        assert!(matches!(
            parse_term("oplus(1/0, f, g)"),
            Err(Error::Parse { position: 6, .. })
        ));
    }
}
