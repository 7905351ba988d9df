import { createApp } from "./server.js";
import { PendingModelProvider, StubProvider } from "./stub.js";
import type { ModelProvider } from "./protocol.js";

/**
 * Entry point. Flags win over environment variables:
 *   --port N      (QA_BRIDGE_PORT, default 8750)
 *   --stub        (QA_BRIDGE_STUB=1) serve the deterministic stub model
 *   --model NAME  (QA_BRIDGE_MODEL) identifier of a real QA model; without a
 *                 wired adapter the bridge stays in the loading state
 */

function parseArgs(argv: string[]): { port: number; stub: boolean; model: string } {
  let port = Number(process.env.QA_BRIDGE_PORT ?? 8750);
  let stub = process.env.QA_BRIDGE_STUB === "1";
  let model = process.env.QA_BRIDGE_MODEL ?? "bert-base-squad2";
  for (let i = 0; i < argv.length; i++) {
    switch (argv[i]) {
      case "--port":
        port = Number(argv[++i]);
        break;
      case "--stub":
        stub = true;
        break;
      case "--model":
        model = argv[++i];
        break;
      default:
        console.error(`unknown argument: ${argv[i]}`);
        process.exit(1);
    }
  }
  if (!Number.isInteger(port) || port < 0 || port > 65535) {
    console.error(`invalid port: ${port}`);
    process.exit(1);
  }
  return { port, stub, model };
}

const { port, stub, model } = parseArgs(process.argv.slice(2));
const provider: ModelProvider = stub
  ? new StubProvider()
  : new PendingModelProvider(model);

const app = createApp({ provider });
const server = app.listen(port, () => {
  const address = server.address();
  const boundPort = typeof address === "object" && address ? address.port : port;
  console.log(`qa-bridge listening on :${boundPort} (model=${provider.name})`);
});
