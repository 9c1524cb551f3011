/** Wire types for the lexigap HTTP API. */

export type Mode = "svetlan" | "structure" | "ewn" | "combined";

export interface SlotBody {
  link: string;
  governor?: string | null;
}

export interface ResolveRequest {
  context: string[]; // pre-lemmatized "text:POS" tokens
  mode?: string;
  threshold?: number;
  pos?: string;
  slot?: SlotBody;
  phono?: string;
  top?: number;
}

export interface DomainProvenance {
  type: "domain";
  domain: string;
  coverage: number;
  weight: number;
}

export interface StructureProvenance {
  type: "structure";
  verb: string;
  link: string;
}

export interface ParadigmaticProvenance {
  type: "paradigmatic";
  source: string;
  path: string[];
}

export interface PhonoProvenance {
  type: "phono";
  similarity: number;
}

export type Provenance =
  | DomainProvenance
  | StructureProvenance
  | ParadigmaticProvenance
  | PhonoProvenance;

export interface Candidate {
  lemma: string;
  pos: string;
  score: number;
  provenance: Provenance[];
}

export interface SelectedDomain {
  id: string;
  name: string;
  coverage: number;
}

export interface ResolveResponse {
  candidates: Candidate[];
  selected_domains: SelectedDomain[];
}

export interface FieldError {
  loc: (string | number)[];
  msg: string;
}
