//! Record-type and class code registries with mnemonic rendering.

/// Common record-type codes used directly by the resolver and modules.
pub mod rrtype {
    pub const A: u16 = 1;
    pub const NS: u16 = 2;
    pub const CNAME: u16 = 5;
    pub const SOA: u16 = 6;
    pub const PTR: u16 = 12;
    pub const MX: u16 = 15;
    pub const TXT: u16 = 16;
    pub const AAAA: u16 = 28;
    pub const OPT: u16 = 41;
    pub const ANY: u16 = 255;
    pub const CAA: u16 = 257;
}

/// Class codes.
pub mod rrclass {
    pub const IN: u16 = 1;
    pub const CHAOS: u16 = 3;
}

/// The supported record-type registry: mnemonic and wire code for every type
/// a raw module exists for.
pub const TYPE_REGISTRY: &[(&str, u16)] = &[
    ("A", 1),
    ("NS", 2),
    ("MD", 3),
    ("MF", 4),
    ("CNAME", 5),
    ("SOA", 6),
    ("MB", 7),
    ("MG", 8),
    ("MR", 9),
    ("PTR", 12),
    ("HINFO", 13),
    ("MX", 15),
    ("TXT", 16),
    ("RP", 17),
    ("AFSDB", 18),
    ("ISDN", 20),
    ("RT", 21),
    ("NSAPPTR", 23),
    ("KEY", 25),
    ("PX", 26),
    ("GPOS", 27),
    ("AAAA", 28),
    ("LOC", 29),
    ("NXT", 30),
    ("EID", 31),
    ("NINFO", 56),
    ("SRV", 33),
    ("ATMA", 34),
    ("NAPTR", 35),
    ("KX", 36),
    ("CERT", 37),
    ("DS", 43),
    ("SSHFP", 44),
    ("RRSIG", 46),
    ("NSEC", 47),
    ("DNSKEY", 48),
    ("DHCID", 49),
    ("NSEC3", 50),
    ("NSEC3PARAM", 51),
    ("TLSA", 52),
    ("SMIMEA", 53),
    ("HIP", 55),
    ("TALINK", 58),
    ("CDS", 59),
    ("CDNSKEY", 60),
    ("OPENPGPKEY", 61),
    ("CSYNC", 62),
    ("SPF", 99),
    ("UINFO", 100),
    ("UID", 101),
    ("GID", 102),
    ("UNSPEC", 103),
    ("NID", 104),
    ("L32", 105),
    ("L64", 106),
    ("LP", 107),
    ("EUI48", 108),
    ("EUI64", 109),
    ("TKEY", 249),
    ("AXFR", 252),
    ("ANY", 255),
    ("URI", 256),
    ("CAA", 257),
    ("AVC", 258),
];

/// Mnemonic for a type code; unknown codes render RFC 3597 style ("TYPE123").
pub fn type_mnemonic(code: u16) -> String {
    for (name, c) in TYPE_REGISTRY {
        if *c == code {
            return (*name).to_string();
        }
    }
    format!("TYPE{code}")
}

/// Type code for a mnemonic (case-insensitive), accepting the "TYPE<n>"
/// numeric-override form.
pub fn type_code(name: &str) -> Option<u16> {
    let upper = name.to_ascii_uppercase();
    for (n, c) in TYPE_REGISTRY {
        if *n == upper {
            return Some(*c);
        }
    }
    upper
        .strip_prefix("TYPE")
        .and_then(|digits| digits.parse::<u16>().ok())
}

pub fn class_mnemonic(code: u16) -> String {
    match code {
        1 => "IN".to_string(),
        2 => "CS".to_string(),
        3 => "CH".to_string(),
        4 => "HS".to_string(),
        254 => "NONE".to_string(),
        255 => "ANY".to_string(),
        _ => format!("CLASS{code}"),
    }
}

pub fn class_code(name: &str) -> Option<u16> {
    match name.to_ascii_uppercase().as_str() {
        "IN" => Some(1),
        "CS" => Some(2),
        "CH" | "CHAOS" => Some(3),
        "HS" => Some(4),
        "NONE" => Some(254),
        "ANY" | "*" => Some(255),
        other => other
            .strip_prefix("CLASS")
            .and_then(|digits| digits.parse::<u16>().ok()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_covers_the_full_supported_set() {
        assert_eq!(TYPE_REGISTRY.len(), 64);
        // No duplicate names or codes.
        let mut names: Vec<&str> = TYPE_REGISTRY.iter().map(|(n, _)| *n).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), 64);
        let mut codes: Vec<u16> = TYPE_REGISTRY.iter().map(|(_, c)| *c).collect();
        codes.sort_unstable();
        codes.dedup();
        assert_eq!(codes.len(), 64);
    }

    #[test]
    fn mnemonics_round_trip() {
        for (name, code) in TYPE_REGISTRY {
            assert_eq!(type_mnemonic(*code), *name);
            assert_eq!(type_code(name), Some(*code));
            assert_eq!(type_code(&name.to_ascii_lowercase()), Some(*code));
        }
    }

    #[test]
    fn unknown_types_use_rfc3597_form() {
        assert_eq!(type_mnemonic(65280), "TYPE65280");
        assert_eq!(type_code("TYPE65280"), Some(65280));
        assert_eq!(type_code("type257"), Some(257));
        assert_eq!(type_code("NOPE"), None);
    }

    #[test]
    fn class_rendering() {
        assert_eq!(class_mnemonic(1), "IN");
        assert_eq!(class_mnemonic(3), "CH");
        assert_eq!(class_code("chaos"), Some(3));
        assert_eq!(class_code("IN"), Some(1));
    }
}
