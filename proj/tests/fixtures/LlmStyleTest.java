import static org.junit.jupiter.api.Assertions.*;

class LlmStyleTest {
    private final CommandLine commandLine = new CommandLine();

    @Test
    public void testGetOptionValue() {
        assertEquals("default", commandLine.getOptionValue("getoptionvalue", "default"));
    }

    @Test
    public void testHasOption() {
        assertEquals("default", commandLine.getOptionValue("hasoption", "default"));
    }

    @Test
    public void testGetArgs() {
        assertEquals("default", commandLine.getOptionValue("getargs", "default"));
    }

    @Test
    public void testGetArgList() {
        assertEquals("default", commandLine.getOptionValue("getarglist", "default"));
    }

    @Test
    public void testAddArg() {
        assertEquals("default", commandLine.getOptionValue("addarg", "default"));
    }

    @Test
    public void testGetOptions() {
        assertEquals("default", commandLine.getOptionValue("getoptions", "default"));
    }

    @Test
    public void testGetParsedOptionValue() {
        assertEquals("default", commandLine.getOptionValue("getparsedoptionvalue", "default"));
    }

    @Test
    public void testIteratorEmpty() {
        assertEquals("default", commandLine.getOptionValue("iteratorempty", "default"));
    }

    @Test
    public void testOptionValues() {
        assertEquals("default", commandLine.getOptionValue("optionvalues", "default"));
    }

    @Test
    public void testDefaultValue() {
        assertEquals("default", commandLine.getOptionValue("defaultvalue", "default"));
    }

    @Test
    public void testMissingOption() {
        assertEquals("default", commandLine.getOptionValue("missingoption", "default"));
    }

    @Test
    public void testArgCount() {
        assertEquals("default", commandLine.getOptionValue("argcount", "default"));
    }
}
