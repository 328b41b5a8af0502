/** Wire types mirroring docs/api.md of the backend. Vertices are integer
 * bitmasks 0..2^n-1; heights are value arrays indexed by vertex. */

export interface HeightJson {
  n: number;
  values: number[];
}

export interface CurveImage {
  k: number;
  a: number;
  b4: number;
  c2: number;
}

export interface ImageJson {
  curves: CurveImage[];
}

export interface Move {
  op: "lower" | "raise";
  vertex: number;
}

export interface SessionState {
  id: string;
  n: number;
  height: HeightJson;
  history: Move[];
  image: ImageJson | null;
}

export interface LegalMoves {
  lower: number[];
  raise: number[];
}

export interface DivisorPoint {
  type: "vertex" | "face";
  id?: number;
  colors?: number[];
  basepoint?: number;
  kappa: number;
}

export interface DivisorJson {
  points: DivisorPoint[];
  degree: number;
}

export interface Splitting {
  k: number;
  signs: number[];
}

export type InitSpec = "fully_extended" | "valise" | { values: number[] };

/** Session API surface consumed by the explorer; implemented over HTTP for
 * the browser and over recorded fixtures in tests. */
export interface Client {
  createSession(n: number, init: InitSpec): Promise<SessionState>;
  getSession(id: string): Promise<SessionState>;
  move(id: string, op: Move["op"], vertex: number): Promise<SessionState>;
  legalMoves(id: string): Promise<LegalMoves>;
  divisor(id: string): Promise<DivisorJson>;
  splitting(id: string, k: number): Promise<Splitting>;
}

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
  }
}
