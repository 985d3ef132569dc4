//! Typed record payloads with zone-text presentation rendering.

use std::net::{Ipv4Addr, Ipv6Addr};

use super::name::DomainName;

/// Decoded record data. Types the toolkit reasons about get structured
/// variants; anything else is carried as raw bytes so unrecognized records
/// never fail decoding.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RData {
    A(Ipv4Addr),
    Aaaa(Ipv6Addr),
    Ns(DomainName),
    Cname(DomainName),
    Ptr(DomainName),
    Txt(Vec<Vec<u8>>),
    Mx {
        preference: u16,
        exchange: DomainName,
    },
    Soa {
        mname: DomainName,
        rname: DomainName,
        serial: u32,
        refresh: u32,
        retry: u32,
        expire: u32,
        minimum: u32,
    },
    Caa {
        flag: u8,
        tag: String,
        value: String,
    },
    Raw(Vec<u8>),
}

impl RData {
    /// Zone-file presentation form. Name-valued data keeps the trailing dot;
    /// raw payloads render as lowercase hex.
    pub fn presentation(&self) -> String {
        match self {
            RData::A(ip) => ip.to_string(),
            RData::Aaaa(ip) => ip.to_string(),
            RData::Ns(n) | RData::Cname(n) | RData::Ptr(n) => n.to_fqdn(),
            RData::Txt(strings) => strings
                .iter()
                .map(|s| String::from_utf8_lossy(s).into_owned())
                .collect::<Vec<_>>()
                .join(""),
            RData::Mx {
                preference,
                exchange,
            } => format!("{preference} {}", exchange.to_fqdn()),
            RData::Soa {
                mname,
                rname,
                serial,
                refresh,
                retry,
                expire,
                minimum,
            } => format!(
                "{} {} {serial} {refresh} {retry} {expire} {minimum}",
                mname.to_fqdn(),
                rname.to_fqdn()
            ),
            RData::Caa { flag, tag, value } => format!("{flag} {tag} \"{value}\""),
            RData::Raw(bytes) => hex::encode(bytes),
        }
    }

    /// The target name for record types that delegate or alias, if any.
    pub fn target_name(&self) -> Option<&DomainName> {
        match self {
            RData::Ns(n) | RData::Cname(n) | RData::Ptr(n) => Some(n),
            RData::Mx { exchange, .. } => Some(exchange),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presentation_forms() {
        assert_eq!(
            RData::A(Ipv4Addr::new(192, 5, 6, 30)).presentation(),
            "192.5.6.30"
        );
        assert_eq!(
            RData::Ns("f.gtld-servers.net".parse().unwrap()).presentation(),
            "f.gtld-servers.net."
        );
        assert_eq!(
            RData::Mx {
                preference: 10,
                exchange: "mail.example.com".parse().unwrap()
            }
            .presentation(),
            "10 mail.example.com."
        );
        assert_eq!(
            RData::Caa {
                flag: 0,
                tag: "issue".into(),
                value: "letsencrypt.org".into()
            }
            .presentation(),
            "0 issue \"letsencrypt.org\""
        );
        assert_eq!(RData::Raw(vec![0xde, 0xad]).presentation(), "dead");
    }
}
