class EvoTest {
@Test(timeout = 4000)
public void test02() throws Throwable {
    CommandLine commandLine0 = new CommandLine();
    Option option0 = new Option("", "\"Jd", true, "D1,L");
    option0.addValue("org.apache.commons.cli.CommandLine");
    commandLine0.addOption(option0);
    String string0 = commandLine0.getOptionValue("--", null);
    assertNotNull(string0);
    assertEquals("org.apache.commons.cli.CommandLine", string0);
}
}
