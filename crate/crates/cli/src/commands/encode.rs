use std::collections::BTreeSet;

use anyhow::{bail, Context, Result};
use lamweb::codec::{
    decode_term, encode_term, mix_code, pair_code, pair_decode, prime, relabel_prime_power, set_code, set_decode,
    theta_decode, theta_encode, Code,
};
use lamweb::completion::parse_element;
use num_bigint::BigUint;

use super::term;
use crate::websrc::parse_web_spec;
use crate::{exit, EncodeCmd};

fn number(text: &str) -> Result<Code> {
    text.trim().parse::<BigUint>().with_context(|| format!("`{text}` is not a natural number"))
}

fn number_set(text: &str) -> Result<BTreeSet<Code>> {
    let inner = text.trim().trim_start_matches('{').trim_end_matches('}');
    inner.split(',').map(str::trim).filter(|s| !s.is_empty()).map(number).collect()
}

fn show_set(s: &BTreeSet<Code>) -> String {
    let items: Vec<String> = s.iter().map(|c| c.to_string()).collect();
    format!("{{{}}}", items.join(","))
}

pub(crate) fn encode(what: &EncodeCmd) -> Result<(i32, String)> {
    let line = match what {
        EncodeCmd::Term { value, decode: false } => encode_term(&term(value)?).to_string(),
        EncodeCmd::Term { value, decode: true } => decode_term(&number(value)?)?.to_string(),
        EncodeCmd::Element { web, value, decode } => {
            let spec = parse_web_spec(web)?;
            let Some(pair) = spec.web.as_pair() else { bail!("θ codes need a finite web") };
            if *decode {
                theta_decode(pair, &number(value)?)?.to_string()
            } else {
                theta_encode(pair, &parse_element(value)?)?.to_string()
            }
        }
        EncodeCmd::Pair { values, decode: false } => match values.as_slice() {
            [m, n] => pair_code(&number(m)?, &number(n)?).to_string(),
            _ => bail!("pair takes two numbers"),
        },
        EncodeCmd::Pair { values, decode: true } => match values.as_slice() {
            [c] => {
                let (m, n) = pair_decode(&number(c)?);
                format!("{m} {n}")
            }
            _ => bail!("pair --decode takes one code"),
        },
        EncodeCmd::Set { value, decode: false } => set_code(&number_set(value)?)?.to_string(),
        EncodeCmd::Set { value, decode: true } => show_set(&set_decode(&number(value)?)),
        EncodeCmd::Mix { set, n } => mix_code(&number_set(set)?, &number(n)?)?.to_string(),
        EncodeCmd::Prime { k } => prime(*k)?.to_string(),
        EncodeCmd::Relabel { web, k } => {
            let spec = parse_web_spec(web)?;
            let Some(pair) = spec.web.as_pair() else { bail!("relabeling needs a finite web") };
            relabel_prime_power(pair, *k)?.to_string()
        }
    };
    Ok((exit::OK, format!("{line}\n")))
}
